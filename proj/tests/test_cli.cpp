#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "fishburn/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fishburn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("triangle subcommand") {
  const Run r = run({"triangle", "--kind", "fishburn", "--rows", "5", "--from", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n2\n5 1\n15 9\n53 62 5\n");

  const Run zero = run({"triangle", "--kind", "mahonian", "--rows", "3"});
  CHECK(zero.code == 0);
  CHECK(zero.out == "1\n1\n1 1\n");  // rows 0..2

  const Run csv = run({"triangle", "--kind", "unsieved", "--rows", "4", "--from", "1",
                       "--format", "csv"});
  CHECK(csv.out == "1\n2\n6,1\n24,9\n");

  const Run bad = run({"triangle", "--kind", "nonsense", "--rows", "3"});
  CHECK(bad.code == 2);
}

TEST_CASE("occurrences subcommand") {
  const Run r = run({"occurrences", "--pattern", "sigma-132", "--perm", "4671253"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1,2,6)\n(5,6,7)\n");

  const Run dsl = run({"occurrences", "--pattern", "231|0,1;1,0;1,1;1,2;1,3;2,1;3,1",
                       "--perm", "231"});
  CHECK(dsl.code == 0);
  CHECK(dsl.out == "(1,2,3)\n");

  const Run bad_pattern = run({"occurrences", "--pattern", "21|5,0", "--perm", "21"});
  CHECK(bad_pattern.code == 3);
  CHECK(bad_pattern.err.find("offset") != std::string::npos);

  const Run bad_perm = run({"occurrences", "--pattern", "inv", "--perm", "911"});
  CHECK(bad_perm.code == 3);
}

TEST_CASE("distribution and stat subcommands") {
  const Run r = run({"distribution", "--pattern", "sigma", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 5\n1 1\n");

  const Run csv = run({"distribution", "--pattern", "inv", "--n", "3", "--format", "csv"});
  CHECK(csv.out == "k,count\n0,1\n1,2\n2,2\n3,1\n");

  const Run stat = run({"stat", "--structure", "matchings", "--statistic", "confused",
                        "--n", "3"});
  CHECK(stat.out == "0 5\n1 1\n");

  const Run nest = run({"stat", "--structure", "matchings", "--statistic", "nestings",
                        "--n", "3"});
  CHECK(nest.out == "0 1\n1 2\n2 2\n3 1\n");

  const Run inc = run({"stat", "--structure", "posets", "--statistic", "incomparable",
                       "--n", "3"});
  CHECK(inc.out == "0 1\n1 2\n2 2\n3 1\n");

  const Run mis = run({"stat", "--structure", "posets", "--statistic", "mislabelings",
                       "--n", "3"});
  CHECK(mis.out == "0 5\n1 1\n");

  const Run mismatch = run({"stat", "--structure", "posets", "--statistic", "confused",
                            "--n", "3"});
  CHECK(mismatch.code == 3);
}

TEST_CASE("classify subcommand emits the flag table") {
  const Run r = run({"classify", "--matching", "(1,4)(2,3)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("opener,closer,nesting") == 0);
  CHECK(r.out.find("1,4,1,0,1,0,1,0,0,0,0,0,0,0") != std::string::npos);
}

TEST_CASE("bijection subcommand, forward and reverse") {
  const Run fwd = run({"bijection", "--kind", "perm", "--input", "246531", "--marks",
                       "4,1;6,1;6,5"});
  CHECK(fwd.code == 0);
  CHECK(fwd.out ==
        "permutation: 4,3,6,2,8,9,7,5,1\n"
        "marked-occurrences: 2,3,4;4,5,9;5,6,7\n");

  const Run rev = run({"bijection", "--kind", "perm", "--input", "436289751", "--marks",
                       "2,3,4;4,5,9;5,6,7", "--reverse"});
  CHECK(rev.code == 0);
  CHECK(rev.out ==
        "permutation: 2,4,6,5,3,1\n"
        "marked-inversions: 4,1;6,1;6,5\n");

  const Run match = run({"bijection", "--kind", "matching", "--input",
                         "(1,9)(2,12)(3,10)(4,7)(5,8)(6,11)", "--marks",
                         "2,12,4;1,9,4;2,12,3"});
  CHECK(match.code == 0);
  CHECK(match.out ==
        "matching: (1,12)(2,16)(3,17)(4,14)(5,18)(6,13)(7,10)(8,11)(9,15)\n"
        "marked-confused: 3,17;5,18;6,13\n");

  const Run poset = run({"bijection", "--kind", "poset", "--input", "0,1,0,3,0,0",
                         "--marks", "2,3;1,3;4,6;3,6"});
  CHECK(poset.code == 0);
  CHECK(poset.out ==
        "poset: 0,1,2,1,0,5,0,6,5,0\n"
        "marked-mislabelings: 3;4;8;9\n");

  const Run poset_rev = run({"bijection", "--kind", "poset", "--input",
                             "0,1,2,1,0,5,0,6,5,0", "--marks", "3;4;8;9", "--reverse"});
  CHECK(poset_rev.code == 0);
  CHECK(poset_rev.out ==
        "poset: 0,1,0,3,0,0\n"
        "marked-pairs: 2,3;1,3;4,6;3,6\n");

  const Run invalid = run({"bijection", "--kind", "perm", "--input", "246531", "--marks",
                           "1,4"});
  CHECK(invalid.code == 3);
}

TEST_CASE("json output round-trips byte-identically") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"triangle", "--kind", "fishburn", "--rows", "6", "--from", "1",
                                 "--format", "json"},
        std::vector<std::string>{"distribution", "--pattern", "sigma", "--n", "4", "--format",
                                 "json"},
        std::vector<std::string>{"bijection", "--kind", "perm", "--input", "246531", "--marks",
                                 "4,1;6,1;6,5", "--format", "json"},
        std::vector<std::string>{"verify", "--suite", "matrices", "--max-n", "4", "--format",
                                 "json"}}) {
    const Run r = run(args);
    REQUIRE(r.code == 0);
    const nlohmann::json parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.dump() + "\n" == r.out);
  }
}

TEST_CASE("verify subcommand") {
  CHECK(run({"verify", "--suite", "identities", "--max-n", "10"}).code == 0);

  const Run r = run({"verify", "--suite", "matrices", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS matrices/matrix oracle matches the unsieved triangle") !=
        std::string::npos);
  CHECK(r.out.find("2/2 checks passed") != std::string::npos);

  const Run unknown = run({"verify", "--suite", "nonsense"});
  CHECK(unknown.code == 2);

  // deterministic under --jobs
  const Run serial = run({"verify", "--suite", "patterns", "--max-n", "5", "--format", "json"});
  const Run parallel =
      run({"verify", "--suite", "patterns", "--max-n", "5", "--jobs", "4", "--format", "json"});
  const nlohmann::json a = nlohmann::json::parse(serial.out);
  const nlohmann::json b = nlohmann::json::parse(parallel.out);
  REQUIRE(a.contains("checks"));
  REQUIRE(b.contains("checks"));
  for (std::size_t i = 0; i < a["checks"].size(); ++i) {
    CHECK(a["checks"][i]["name"] == b["checks"][i]["name"]);
    CHECK(a["checks"][i]["pass"] == b["checks"][i]["pass"]);
    CHECK(a["checks"][i]["expected"] == b["checks"][i]["expected"]);
    CHECK(a["checks"][i]["actual"] == b["checks"][i]["actual"]);
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"triangle"}).code == 2);  // missing required options
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
