#include "fishburn/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fishburn/detail/parse.hpp"
#include "fishburn/genfun.hpp"
#include "fishburn/matchings.hpp"
#include "fishburn/meshpat.hpp"
#include "fishburn/posets.hpp"
#include "fishburn/verify.hpp"

namespace fishburn::cli {

namespace {

meshpat::MeshPattern resolve_pattern(const std::string& text) {
  const auto& names = meshpat::builtin_names();
  if (std::find(names.begin(), names.end(), text) != names.end())
    return meshpat::builtin(text);
  return meshpat::MeshPattern::parse(text);
}

// Mark payloads are semicolon-separated integer tuples of a fixed arity,
// e.g. "4,1;6,1;6,5". The empty string is the empty marking.
std::vector<std::vector<int>> parse_tuples(const std::string& text, std::size_t arity) {
  std::vector<std::vector<int>> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    std::vector<int> tuple;
    tuple.push_back(detail::parse_uint(text, pos));
    while (tuple.size() < arity) {
      detail::expect(text, pos, ',');
      tuple.push_back(detail::parse_uint(text, pos));
    }
    out.push_back(std::move(tuple));
    if (pos == text.size()) break;
    detail::expect(text, pos, ';');
  }
  return out;
}

std::string join_tuples(const std::vector<std::vector<int>>& tuples) {
  std::ostringstream os;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < tuples[i].size(); ++j) {
      if (j) os << ',';
      os << tuples[i][j];
    }
  }
  return os.str();
}

genfun::TriangleFormat triangle_format(const std::string& name) {
  if (name == "table") return genfun::TriangleFormat::Table;
  if (name == "csv") return genfun::TriangleFormat::Csv;
  if (name == "json") return genfun::TriangleFormat::Json;
  return genfun::TriangleFormat::Bfile;
}

void print_distribution(std::ostream& out, const std::map<int, Int>& hist,
                        const std::string& format, const std::string& label,
                        const std::string& label_value, int n) {
  if (format == "table") {
    for (const auto& [k, count] : hist) out << k << ' ' << count << '\n';
  } else if (format == "csv") {
    out << "k,count\n";
    for (const auto& [k, count] : hist) out << k << ',' << count << '\n';
  } else {
    nlohmann::json dist;
    for (const auto& [k, count] : hist) dist[std::to_string(k)] = count.str();
    nlohmann::json doc;
    doc["distribution"] = std::move(dist);
    doc["n"] = n;
    doc[label] = label_value;
    out << doc.dump() << '\n';
  }
}

struct TriangleCmd {
  std::string kind = "fishburn";
  int rows = 10;
  int from = 0;
  std::string format = "table";
};

struct DistributionCmd {
  std::string pattern;
  int n = 0;
  std::string format = "table";
};

struct StatCmd {
  std::string structure;
  std::string statistic;
  int n = 0;
  std::string format = "table";
};

struct OccurrencesCmd {
  std::string pattern;
  std::string perm;
};

struct ClassifyCmd {
  std::string matching;
};

struct BijectionCmd {
  std::string kind;
  std::string input;
  std::string marks;
  bool reverse = false;
  std::string format = "text";
};

struct VerifyCmd {
  std::string suite = "all";
  int max_n = -1;
  int jobs = 1;
  std::string format = "text";
};

int run_triangle(const TriangleCmd& cmd, std::ostream& out) {
  const int top = cmd.from + cmd.rows - 1;
  genfun::Triangle tri;
  if (cmd.kind == "mahonian") {
    std::vector<std::vector<Int>> rows;
    for (int n = 0; n <= top; ++n) rows.push_back(genfun::mahonian_row(n));
    tri = genfun::Triangle(std::move(rows));
  } else if (cmd.kind == "unsieved") {
    tri = genfun::unsieved_triangle(top);
  } else {
    tri = genfun::fishburn_triangle(top);
  }
  out << genfun::format_triangle(tri, cmd.from, triangle_format(cmd.format));
  return 0;
}

int run_distribution(const DistributionCmd& cmd, std::ostream& out) {
  const meshpat::MeshPattern pattern = resolve_pattern(cmd.pattern);
  const std::map<int, Int> hist = meshpat::distribution(pattern, cmd.n);
  print_distribution(out, hist, cmd.format, "pattern", pattern.str(), cmd.n);
  return 0;
}

int run_stat(const StatCmd& cmd, std::ostream& out) {
  const bool on_matchings = cmd.structure == "matchings";
  if (on_matchings && cmd.statistic != "confused" && cmd.statistic != "nestings")
    throw ParseError(0, "matchings support the statistics 'confused' and 'nestings'");
  if (!on_matchings && cmd.statistic != "mislabelings" && cmd.statistic != "incomparable")
    throw ParseError(0, "posets support the statistics 'mislabelings' and 'incomparable'");
  std::map<int, Int> hist;
  for_each_inversion_table(cmd.n, [&](const InversionTable& t) {
    int stat = 0;
    if (on_matchings) {
      const matchings::Matching m = matchings::from_inversion_table(t);
      stat = cmd.statistic == "confused" ? static_cast<int>(matchings::confused_arcs(m).size())
                                         : matchings::nesting_pair_count(m);
    } else {
      const posets::FactorialPoset p = posets::FactorialPoset::from_inversion_table(t);
      stat = cmd.statistic == "mislabelings"
                 ? static_cast<int>(posets::mislabelings(p).size())
                 : static_cast<int>(posets::incomparable_pairs(p).size());
    }
    hist[stat] += 1;
  });
  print_distribution(out, hist, cmd.format, "statistic", cmd.statistic, cmd.n);
  return 0;
}

int run_occurrences(const OccurrencesCmd& cmd, std::ostream& out) {
  const meshpat::MeshPattern pattern = resolve_pattern(cmd.pattern);
  const Permutation perm = Permutation::parse(cmd.perm);
  for (const auto& occ : meshpat::occurrences(pattern, perm)) {
    out << '(';
    for (std::size_t i = 0; i < occ.positions.size(); ++i) {
      if (i) out << ',';
      out << occ.positions[i];
    }
    out << ")\n";
  }
  return 0;
}

int run_classify(const ClassifyCmd& cmd, std::ostream& out) {
  const matchings::Matching m = matchings::Matching::parse(cmd.matching);
  out << matchings::classification_csv(m);
  return 0;
}

void emit_bijection(std::ostream& out, const std::string& format, const std::string& kind,
                    const std::string& result_key, const std::string& result_value,
                    const std::string& marks_key, const std::vector<std::vector<int>>& marks) {
  if (format == "text") {
    out << result_key << ": " << result_value << '\n';
    out << marks_key << ": " << join_tuples(marks) << '\n';
    return;
  }
  nlohmann::json doc;
  doc["kind"] = kind;
  doc[result_key] = result_value;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& tuple : marks) {
    if (tuple.size() == 1) {
      list.push_back(tuple[0]);
    } else {
      list.push_back(tuple);
    }
  }
  doc[marks_key] = std::move(list);
  out << doc.dump() << '\n';
}

int run_bijection(const BijectionCmd& cmd, std::ostream& out) {
  if (cmd.kind == "perm") {
    const Permutation perm = Permutation::parse(cmd.input);
    if (!cmd.reverse) {
      meshpat::MarkedPermutation base{perm, {}, {}};
      for (const auto& t : parse_tuples(cmd.marks, 2))
        base.marked_inversions.push_back({t[0], t[1]});
      const meshpat::MarkedPermutation image = meshpat::insert_sigma(base);
      std::vector<std::vector<int>> occ;
      for (const auto& o : image.marked_occurrences) occ.push_back(o.positions);
      emit_bijection(out, cmd.format, "perm", "permutation", image.perm.str(),
                     "marked-occurrences", occ);
    } else {
      meshpat::MarkedPermutation base{perm, {}, {}};
      for (const auto& t : parse_tuples(cmd.marks, 3))
        base.marked_occurrences.push_back({{t[0], t[1], t[2]}});
      const meshpat::MarkedPermutation image = meshpat::remove_sigma(base);
      std::vector<std::vector<int>> pairs;
      for (const auto& p : image.marked_inversions) pairs.push_back({p.first, p.second});
      emit_bijection(out, cmd.format, "perm", "permutation", image.perm.str(),
                     "marked-inversions", pairs);
    }
  } else if (cmd.kind == "matching") {
    const matchings::Matching m = matchings::Matching::parse(cmd.input);
    if (!cmd.reverse) {
      matchings::MarkedMatching base{m, {}, {}};
      for (const auto& t : parse_tuples(cmd.marks, 3))
        base.marked_openers.push_back({{t[0], t[1]}, t[2]});
      const matchings::MarkedMatching image = matchings::insert_confused(base);
      std::vector<std::vector<int>> arcs;
      for (const auto& a : image.marked_confused) arcs.push_back({a.opener, a.closer});
      emit_bijection(out, cmd.format, "matching", "matching", image.matching.str(),
                     "marked-confused", arcs);
    } else {
      matchings::MarkedMatching base{m, {}, {}};
      for (const auto& t : parse_tuples(cmd.marks, 2))
        base.marked_confused.push_back({t[0], t[1]});
      const matchings::MarkedMatching image = matchings::remove_confused(base);
      std::vector<std::vector<int>> openers;
      for (const auto& e : image.marked_openers)
        openers.push_back({e.nesting_arc.opener, e.nesting_arc.closer, e.opener});
      emit_bijection(out, cmd.format, "matching", "matching", image.matching.str(),
                     "marked-openers", openers);
    }
  } else {
    const posets::FactorialPoset p = posets::FactorialPoset::parse(cmd.input);
    if (!cmd.reverse) {
      posets::MarkedPoset base{p, {}, {}};
      for (const auto& t : parse_tuples(cmd.marks, 2)) base.marked_pairs.push_back({t[0], t[1]});
      const posets::MarkedPoset image = posets::insert_mislabelings(base);
      std::vector<std::vector<int>> labels;
      for (int label : image.marked_mislabelings) labels.push_back({label});
      emit_bijection(out, cmd.format, "poset", "poset", image.poset.str(),
                     "marked-mislabelings", labels);
    } else {
      posets::MarkedPoset base{p, {}, {}};
      for (const auto& t : parse_tuples(cmd.marks, 1)) base.marked_mislabelings.push_back(t[0]);
      const posets::MarkedPoset image = posets::remove_mislabelings(base);
      std::vector<std::vector<int>> pairs;
      for (const auto& pr : image.marked_pairs) pairs.push_back({pr.i, pr.j});
      emit_bijection(out, cmd.format, "poset", "poset", image.poset.str(), "marked-pairs", pairs);
    }
  }
  return 0;
}

int run_verify(const VerifyCmd& cmd, std::ostream& out) {
  const verify::Report report = verify::run_suite(cmd.suite, cmd.max_n, cmd.jobs);
  if (cmd.format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
      nlohmann::json item;
      item["name"] = c.name;
      item["pass"] = c.pass;
      item["expected"] = c.expected;
      item["actual"] = c.actual;
      item["millis"] = c.millis;
      checks.push_back(std::move(item));
    }
    nlohmann::json doc;
    doc["suite"] = report.suite;
    doc["ok"] = report.all_passed();
    doc["millis"] = report.millis;
    doc["checks"] = std::move(checks);
    out << doc.dump() << '\n';
  } else {
    int passed = 0;
    for (const auto& c : report.checks) {
      std::ostringstream ms;
      ms.precision(1);
      ms << std::fixed << c.millis;
      if (c.pass) {
        out << "PASS " << c.name << " (" << ms.str() << " ms)\n";
        ++passed;
      } else {
        out << "FAIL " << c.name << " (" << ms.str() << " ms)\n";
        out << "  expected: " << c.expected << '\n';
        out << "  actual:   " << c.actual << '\n';
      }
    }
    std::ostringstream total;
    total.precision(1);
    total << std::fixed << report.millis;
    out << "suite " << report.suite << ": " << passed << '/' << report.checks.size()
        << " checks passed in " << total.str() << " ms\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mahonian and Fishburn structures: triangles, pattern distributions, "
               "insertion bijections and their verification suite"};
  app.name("fishburn");
  app.require_subcommand(1);

  TriangleCmd triangle_cmd;
  auto* triangle = app.add_subcommand("triangle", "Print a coefficient triangle");
  triangle->add_option("--kind", triangle_cmd.kind, "mahonian|unsieved|fishburn")
      ->required()
      ->check(CLI::IsMember({"mahonian", "unsieved", "fishburn"}));
  triangle->add_option("--rows", triangle_cmd.rows, "number of rows to print")
      ->required()
      ->check(CLI::Range(1, 64));
  triangle->add_option("--from", triangle_cmd.from, "first row index (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  triangle->add_option("--format", triangle_cmd.format, "table|csv|json|bfile")
      ->check(CLI::IsMember({"table", "csv", "json", "bfile"}));

  DistributionCmd dist_cmd;
  auto* dist = app.add_subcommand("distribution", "Occurrence-count distribution over S_n");
  dist->add_option("--pattern", dist_cmd.pattern, "builtin name or pattern DSL")->required();
  dist->add_option("--n", dist_cmd.n, "permutation size")->required()->check(CLI::Range(0, 12));
  dist->add_option("--format", dist_cmd.format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  StatCmd stat_cmd;
  auto* stat = app.add_subcommand("stat", "Statistic distribution over matchings or posets");
  stat->add_option("--structure", stat_cmd.structure, "matchings|posets")
      ->required()
      ->check(CLI::IsMember({"matchings", "posets"}));
  stat->add_option("--statistic", stat_cmd.statistic,
                   "confused|nestings|mislabelings|incomparable")
      ->required()
      ->check(CLI::IsMember({"confused", "nestings", "mislabelings", "incomparable"}));
  stat->add_option("--n", stat_cmd.n, "structure size")->required()->check(CLI::Range(0, 12));
  stat->add_option("--format", stat_cmd.format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  OccurrencesCmd occ_cmd;
  auto* occ = app.add_subcommand("occurrences", "List mesh-pattern occurrences in a permutation");
  occ->add_option("--pattern", occ_cmd.pattern, "builtin name or pattern DSL")->required();
  occ->add_option("--perm", occ_cmd.perm, "host permutation")->required();

  ClassifyCmd classify_cmd;
  auto* classify = app.add_subcommand("classify", "Arc classification table (CSV)");
  classify->add_option("--matching", classify_cmd.matching, "matching, e.g. \"(1,4)(2,3)\"")
      ->required();

  BijectionCmd bij_cmd;
  auto* bij = app.add_subcommand("bijection", "Apply a marked-feature insertion bijection");
  bij->add_option("--kind", bij_cmd.kind, "perm|matching|poset")
      ->required()
      ->check(CLI::IsMember({"perm", "matching", "poset"}));
  bij->add_option("--input", bij_cmd.input, "structure payload")->required();
  bij->add_option("--marks", bij_cmd.marks, "mark payload (may be empty)");
  bij->add_flag("--reverse", bij_cmd.reverse, "apply the removal direction");
  bij->add_option("--format", bij_cmd.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyCmd verify_cmd;
  auto* ver = app.add_subcommand("verify", "Run the cross-verification suites");
  ver->add_option("--suite", verify_cmd.suite, "which suite to run")
      ->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--max-n", verify_cmd.max_n, "override the per-check size bounds")
      ->check(CLI::Range(0, 16));
  ver->add_option("--jobs", verify_cmd.jobs, "worker threads for exhaustive scans")
      ->check(CLI::Range(1, 256));
  ver->add_option("--format", verify_cmd.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (triangle->parsed()) return run_triangle(triangle_cmd, out);
    if (dist->parsed()) return run_distribution(dist_cmd, out);
    if (stat->parsed()) return run_stat(stat_cmd, out);
    if (occ->parsed()) return run_occurrences(occ_cmd, out);
    if (classify->parsed()) return run_classify(classify_cmd, out);
    if (bij->parsed()) return run_bijection(bij_cmd, out);
    if (ver->parsed()) return run_verify(verify_cmd, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 3;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace fishburn::cli
