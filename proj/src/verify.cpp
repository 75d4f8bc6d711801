#include "fishburn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fishburn/genfun.hpp"
#include "fishburn/matchings.hpp"
#include "fishburn/meshpat.hpp"
#include "fishburn/posets.hpp"

namespace fishburn::verify {

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",      "identities", "patterns",
                                                 "matchings", "posets",     "involution",
                                                 "bijections", "matrices"};
  return names;
}

namespace {

using Hist = std::map<int, Int>;

// Published triangle rows, transcribed from the source figures.
const std::vector<std::vector<long long>> kMahonianRows = {
    {1},
    {1, 1},
    {1, 2, 2, 1},
    {1, 3, 5, 6, 5, 3, 1},
    {1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1},
    {1, 5, 14, 29, 49, 71, 90, 101, 101, 90, 71, 49, 29, 14, 5, 1}};
const std::vector<std::vector<long long>> kUnsievedRows = {
    {1},
    {2},
    {6, 1},
    {24, 9},
    {120, 72, 5},
    {720, 600, 98, 1},
    {5040, 5400, 1450, 76},
    {40320, 52920, 20100, 2200, 35},
    {362880, 564480, 279300, 48750, 2299, 9}};
const std::vector<std::vector<long long>> kFishburnRows = {
    {1},
    {2},
    {5, 1},
    {15, 9},
    {53, 62, 5},
    {217, 407, 95, 1},
    {1014, 2728, 1222, 76},
    {5335, 19180, 13710, 2060, 35},
    {31240, 142979, 146754, 39644, 2254, 9}};
const std::vector<long long> kFishburnNumbers = {1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240};
const std::vector<long long> kUnsievedRowSums = {1, 2, 7, 33, 197, 1419, 11966};

std::string vec_str(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

std::string hist_str(const Hist& h) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : h) {
    if (!first) os << ',';
    os << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Hist row_hist(const std::vector<Int>& row) {
  Hist h;
  for (std::size_t k = 0; k < row.size(); ++k)
    if (row[k] != 0) h[static_cast<int>(k)] = row[k];
  return h;
}

struct Outcome {
  bool pass = true;
  std::string expected;
  std::string actual;
};

CheckResult run_check(const std::string& name, const std::function<Outcome()>& fn) {
  CheckResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = fn();
    r.pass = o.pass;
    r.expected = o.expected;
    r.actual = o.actual;
  } catch (const std::exception& e) {
    r.pass = false;
    r.expected = "no exception";
    r.actual = std::string("exception: ") + e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Splits [0,total) across workers and merges the per-worker states in worker
// order, so the result does not depend on the job count.
template <typename State, typename BodyFn, typename MergeFn>
State partitioned_scan(std::uint64_t total, int jobs, BodyFn body, MergeFn merge) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || total < 64) {
    State s{};
    body(0, total, s);
    return s;
  }
  std::vector<State> states(jobs);
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    const std::uint64_t lo = total / jobs * w + std::min<std::uint64_t>(w, total % jobs);
    const std::uint64_t hi = total / jobs * (w + 1) + std::min<std::uint64_t>(w + 1, total % jobs);
    threads.emplace_back([&body, &states, w, lo, hi] { body(lo, hi, states[w]); });
  }
  for (auto& t : threads) t.join();
  State acc = std::move(states[0]);
  for (int w = 1; w < jobs; ++w) merge(acc, states[w]);
  return acc;
}

void merge_hist(Hist& into, const Hist& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

Hist pattern_distribution(const meshpat::MeshPattern& P, int n, int jobs) {
  return partitioned_scan<Hist>(
      factorial_u64(n), jobs,
      [&P, n](std::uint64_t lo, std::uint64_t hi, Hist& h) {
        for_each_permutation(n, lo, hi, [&](const Permutation& p) {
          h[static_cast<int>(meshpat::occurrence_count(P, p))] += 1;
        });
      },
      merge_hist);
}

Hist matching_stat_distribution(int n, bool confused, int jobs) {
  return partitioned_scan<Hist>(
      factorial_u64(n), jobs,
      [n, confused](std::uint64_t lo, std::uint64_t hi, Hist& h) {
        for_each_inversion_table(n, lo, hi, [&](const InversionTable& t) {
          const matchings::Matching m = matchings::from_inversion_table(t);
          const int stat = confused ? static_cast<int>(matchings::confused_arcs(m).size())
                                    : matchings::nesting_pair_count(m);
          h[stat] += 1;
        });
      },
      merge_hist);
}

Hist poset_stat_distribution(int n, bool mislabeling, int jobs) {
  return partitioned_scan<Hist>(
      factorial_u64(n), jobs,
      [n, mislabeling](std::uint64_t lo, std::uint64_t hi, Hist& h) {
        for_each_inversion_table(n, lo, hi, [&](const InversionTable& t) {
          const posets::FactorialPoset p = posets::FactorialPoset::from_inversion_table(t);
          const int stat = mislabeling ? static_cast<int>(posets::mislabelings(p).size())
                                       : static_cast<int>(posets::incomparable_pairs(p).size());
          h[stat] += 1;
        });
      },
      merge_hist);
}

int bound_or(int max_n, int dflt) { return max_n >= 0 ? max_n : dflt; }

Outcome compare_hist_rows(const std::function<Hist(int)>& dist,
                          const std::function<std::vector<Int>(int)>& row, int lo, int hi,
                          const std::string& what) {
  for (int n = lo; n <= hi; ++n) {
    const Hist got = dist(n);
    const Hist want = row_hist(row(n));
    if (got != want)
      return {false, "n=" + std::to_string(n) + " " + what + " " + hist_str(want),
              "n=" + std::to_string(n) + " " + hist_str(got)};
  }
  const std::string summary =
      what + " for n=" + std::to_string(lo) + ".." + std::to_string(hi);
  return {true, summary, summary};
}

template <typename T>
void for_each_subset(const std::vector<T>& items, const std::function<void(std::vector<T>)>& fn) {
  if (items.size() > 20) throw std::invalid_argument("subset enumeration too large");
  const std::uint32_t total = 1u << items.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<T> subset;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask & (1u << i)) subset.push_back(items[i]);
    fn(std::move(subset));
  }
}

// ---------------------------------------------------------------- identities

void identities_suite(std::vector<CheckResult>& out, int max_n, int) {
  const int N = bound_or(max_n, 12);
  const genfun::Triangle unsieved = genfun::unsieved_triangle(N);
  const genfun::Triangle fish = genfun::fishburn_triangle(N);

  out.push_back(run_check("identities/unsieved triangle matches identity_u", [&]() -> Outcome {
    for (int n = 0; n <= N; ++n)
      for (int i = 0; i <= n; ++i) {
        const Int want = genfun::identity_u(n, i);
        if (unsieved.at(n, i) != want)
          return {false, "u(" + std::to_string(n) + "," + std::to_string(i) + ")=" + want.str(),
                  unsieved.at(n, i).str()};
      }
    return {true, "all columns agree for n<=" + std::to_string(N),
            "all columns agree for n<=" + std::to_string(N)};
  }));

  out.push_back(run_check("identities/fishburn triangle matches identity_f", [&]() -> Outcome {
    for (int n = 0; n <= N; ++n)
      for (int k = 0; k <= n; ++k) {
        const Int want = genfun::identity_f(n, k);
        if (fish.at(n, k) != want)
          return {false, "f(" + std::to_string(n) + "," + std::to_string(k) + ")=" + want.str(),
                  fish.at(n, k).str()};
      }
    return {true, "all columns agree for n<=" + std::to_string(N),
            "all columns agree for n<=" + std::to_string(N)};
  }));

  out.push_back(run_check("identities/fishburn row sums equal n!", [&]() -> Outcome {
    for (int n = 0; n <= N; ++n) {
      Int sum = 0;
      for (const Int& v : fish.row(n)) sum += v;
      if (sum != factorial(n))
        return {false, "row " + std::to_string(n) + " sums to " + factorial(n).str(), sum.str()};
    }
    return {true, "row sums are factorials for n<=" + std::to_string(N),
            "row sums are factorials for n<=" + std::to_string(N)};
  }));

  out.push_back(run_check("identities/fishburn column 0 matches the direct expansion",
                          [&]() -> Outcome {
    const std::vector<Int> nums = genfun::fishburn_numbers(N);
    for (int n = 0; n <= N; ++n)
      if (fish.at(n, 0) != nums[n])
        return {false, "f_" + std::to_string(n) + "=" + nums[n].str(), fish.at(n, 0).str()};
    return {true, "column 0 equals the [n]!_{1-x} expansion", "column 0 equals the [n]!_{1-x} expansion"};
  }));

  out.push_back(run_check("identities/largest nonzero statistic is at most n-2", [&]() -> Outcome {
    for (int n = 2; n <= N; ++n) {
      const int width = static_cast<int>(fish.row(n).size());
      if (width - 1 > n - 2)
        return {false, "row " + std::to_string(n) + " top degree <= " + std::to_string(n - 2),
                std::to_string(width - 1)};
    }
    return {true, "top degree within n-2 for n<=" + std::to_string(N),
            "top degree within n-2 for n<=" + std::to_string(N)};
  }));

  const auto fixture_check = [](const genfun::Triangle& tri,
                                const std::vector<std::vector<long long>>& fixture, int upto,
                                const std::string& what) -> Outcome {
    for (int n = 1; n <= upto; ++n) {
      std::vector<Int> want(fixture[n - 1].begin(), fixture[n - 1].end());
      if (tri.row(n) != want)
        return {false, what + " row " + std::to_string(n) + " = " + vec_str(want),
                vec_str(tri.row(n))};
    }
    return {true, what + " rows 1.." + std::to_string(upto) + " match",
            what + " rows 1.." + std::to_string(upto) + " match"};
  };

  out.push_back(run_check("identities/mahonian rows match the published triangle", [&]() -> Outcome {
    const int upto = std::min<int>(6, N);
    std::vector<std::vector<Int>> rows;
    for (int n = 0; n <= upto; ++n) rows.push_back(genfun::mahonian_row(n));
    return fixture_check(genfun::Triangle(std::move(rows)), kMahonianRows, upto, "mahonian");
  }));
  out.push_back(run_check("identities/unsieved rows match the published triangle", [&]() -> Outcome {
    return fixture_check(unsieved, kUnsievedRows, std::min<int>(9, N), "unsieved");
  }));
  out.push_back(run_check("identities/fishburn rows match the published triangle", [&]() -> Outcome {
    return fixture_check(fish, kFishburnRows, std::min<int>(9, N), "fishburn");
  }));
}

// ------------------------------------------------------------------ patterns

void patterns_suite(std::vector<CheckResult>& out, int max_n, int jobs) {
  const int nPat = bound_or(max_n, 7);
  const int nInv = bound_or(max_n, 8);
  const genfun::Triangle fish = genfun::fishburn_triangle(std::max(nPat, 1));
  const meshpat::MeshPattern sigma = meshpat::builtin("sigma");

  out.push_back(run_check("patterns/distribution(sigma) equals the Fishburn rows", [&]() -> Outcome {
    return compare_hist_rows([&](int n) { return pattern_distribution(sigma, n, jobs); },
                             [&](int n) { return fish.row(n); }, 1, nPat, "fishburn row");
  }));

  out.push_back(run_check("patterns/sigma, sigma-321, sigma-132 and upsilon are equidistributed",
                          [&]() -> Outcome {
    for (int n = 1; n <= nPat; ++n) {
      const Hist base = pattern_distribution(sigma, n, jobs);
      for (const char* name : {"sigma-321", "sigma-132", "upsilon"}) {
        const Hist other = pattern_distribution(meshpat::builtin(name), n, jobs);
        if (other != base)
          return {false, std::string(name) + " at n=" + std::to_string(n) + " " + hist_str(base),
                  hist_str(other)};
      }
    }
    return {true, "all four agree for n<=" + std::to_string(nPat),
            "all four agree for n<=" + std::to_string(nPat)};
  }));

  out.push_back(run_check("patterns/distribution(inv) equals the Mahonian rows", [&]() -> Outcome {
    const meshpat::MeshPattern inv = meshpat::builtin("inv");
    return compare_hist_rows([&](int n) { return pattern_distribution(inv, n, jobs); },
                             [&](int n) { return genfun::mahonian_row(n); }, 1, nInv,
                             "mahonian row");
  }));
}

// ----------------------------------------------------------------- matchings

void matchings_suite(std::vector<CheckResult>& out, int max_n, int jobs) {
  const int nConf = bound_or(max_n, 7);
  const int nNest = bound_or(max_n, 8);
  const genfun::Triangle fish = genfun::fishburn_triangle(std::max(nConf, 1));

  out.push_back(run_check("matchings/confused-arc distribution equals the Fishburn rows",
                          [&]() -> Outcome {
    return compare_hist_rows([&](int n) { return matching_stat_distribution(n, true, jobs); },
                             [&](int n) { return fish.row(n); }, 1, nConf, "fishburn row");
  }));

  out.push_back(run_check("matchings/nesting distribution equals the Mahonian rows",
                          [&]() -> Outcome {
    return compare_hist_rows([&](int n) { return matching_stat_distribution(n, false, jobs); },
                             [&](int n) { return genfun::mahonian_row(n); }, 1, nNest,
                             "mahonian row");
  }));

  out.push_back(run_check("matchings/enumerated matchings are zero-alignment", [&]() -> Outcome {
    for (int n = 0; n <= std::min(nConf, 6); ++n) {
      std::set<matchings::Matching> seen;
      bool ok = true;
      matchings::for_each_zero_alignment(n, [&](const matchings::Matching& m) {
        if (!matchings::is_zero_alignment(m)) ok = false;
        seen.insert(m);
      });
      if (!ok || seen.size() != factorial_u64(n))
        return {false, std::to_string(factorial_u64(n)) + " distinct zero-alignment matchings",
                "n=" + std::to_string(n) + " produced " + std::to_string(seen.size())};
    }
    return {true, "n! distinct zero-alignment matchings", "n! distinct zero-alignment matchings"};
  }));
}

// -------------------------------------------------------------------- posets

void posets_suite(std::vector<CheckResult>& out, int max_n, int jobs) {
  const int nMis = bound_or(max_n, 7);
  const int nCan = bound_or(max_n, 8);
  const int nIso = bound_or(max_n, 5);
  const int nIvl = bound_or(max_n, 6);
  const genfun::Triangle fish = genfun::fishburn_triangle(std::max(nMis, 1));

  out.push_back(run_check("posets/mislabeling distribution equals the Fishburn rows",
                          [&]() -> Outcome {
    return compare_hist_rows([&](int n) { return poset_stat_distribution(n, true, jobs); },
                             [&](int n) { return fish.row(n); }, 1, nMis, "fishburn row");
  }));

  out.push_back(run_check("posets/incomparable-pair distribution equals the Mahonian rows",
                          [&]() -> Outcome {
    return compare_hist_rows([&](int n) { return poset_stat_distribution(n, false, jobs); },
                             [&](int n) { return genfun::mahonian_row(n); }, 1, nMis,
                             "mahonian row");
  }));

  out.push_back(run_check("posets/canonical poset counts equal the Fishburn numbers",
                          [&]() -> Outcome {
    const std::vector<Int> nums = genfun::fishburn_numbers(nCan);
    for (int n = 0; n <= nCan; ++n) {
      Int count = 0;
      for_each_inversion_table(n, [&](const InversionTable& t) {
        if (posets::is_canonical(posets::FactorialPoset::from_inversion_table(t))) ++count;
      });
      if (count != nums[n])
        return {false, "n=" + std::to_string(n) + " count " + nums[n].str(), count.str()};
    }
    return {true, "counts match A022493 for n<=" + std::to_string(nCan),
            "counts match A022493 for n<=" + std::to_string(nCan)};
  }));

  out.push_back(run_check("posets/canonical posets are unique class representatives",
                          [&]() -> Outcome {
    for (int n = 0; n <= nIso; ++n) {
      std::vector<posets::FactorialPoset> canonical, all;
      for_each_inversion_table(n, [&](const InversionTable& t) {
        const posets::FactorialPoset p = posets::FactorialPoset::from_inversion_table(t);
        all.push_back(p);
        if (posets::is_canonical(p)) canonical.push_back(p);
      });
      for (std::size_t a = 0; a < canonical.size(); ++a)
        for (std::size_t b = a + 1; b < canonical.size(); ++b)
          if (posets::isomorphic(canonical[a], canonical[b]))
            return {false, "pairwise non-isomorphic canonical posets at n=" + std::to_string(n),
                    canonical[a].str() + " ~ " + canonical[b].str()};
      for (const auto& p : all) {
        int hits = 0;
        for (const auto& c : canonical)
          if (posets::isomorphic(p, c)) ++hits;
        if (hits != 1)
          return {false, "exactly one canonical representative for " + p.str(),
                  std::to_string(hits) + " representatives"};
      }
    }
    return {true, "canonical representatives unique for n<=" + std::to_string(nIso),
            "canonical representatives unique for n<=" + std::to_string(nIso)};
  }));

  out.push_back(run_check("posets/factorial posets are (2+2)-free interval orders",
                          [&]() -> Outcome {
    const posets::GenericPoset two_plus_two = posets::GenericPoset::parse("4|1<2,3<4");
    if (posets::is_interval_order(two_plus_two) || posets::is_two_plus_two_free(two_plus_two))
      return {false, "2+2 witness rejected by both checks", "witness accepted"};
    for (int n = 0; n <= nIvl; ++n) {
      bool ok = true;
      for_each_inversion_table(n, [&](const InversionTable& t) {
        const posets::GenericPoset g =
            posets::to_generic(posets::FactorialPoset::from_inversion_table(t));
        if (!posets::is_interval_order(g) || !posets::is_two_plus_two_free(g)) ok = false;
      });
      if (!ok)
        return {false, "all factorial posets pass at n=" + std::to_string(n), "a poset failed"};
    }
    return {true, "all pass for n<=" + std::to_string(nIvl),
            "all pass for n<=" + std::to_string(nIvl)};
  }));
}

// ---------------------------------------------------------------- involution

struct InvolutionState {
  bool self_inverse = true;
  bool counts_swap = true;
  bool decomposition = true;
  bool lemma = true;
  std::string self_inverse_ex, counts_swap_ex, decomposition_ex, lemma_ex;
  Hist hist;
};

void involution_suite(std::vector<CheckResult>& out, int max_n, int jobs) {
  const int N = bound_or(max_n, 7);
  const genfun::Triangle fish = genfun::fishburn_triangle(std::max(N, 1));
  const meshpat::MeshPattern sigma = meshpat::builtin("sigma");
  const meshpat::MeshPattern upsilon = meshpat::builtin("upsilon");
  const meshpat::MeshPattern p1 = meshpat::builtin("p1");
  const meshpat::MeshPattern p2 = meshpat::builtin("p2");
  const meshpat::MeshPattern q1 = meshpat::builtin("q1");
  const meshpat::MeshPattern q2 = meshpat::builtin("q2");

  InvolutionState total;
  bool dist_ok = true;
  std::string dist_ex;
  for (int n = 0; n <= N; ++n) {
    InvolutionState s = partitioned_scan<InvolutionState>(
        factorial_u64(n), jobs,
        [&](std::uint64_t lo, std::uint64_t hi, InvolutionState& st) {
          for_each_permutation(n, lo, hi, [&](const Permutation& p) {
            const auto p1occ = meshpat::occurrences(p1, p);
            const auto q1occ = meshpat::occurrences(q1, p);
            const auto p2occ = meshpat::occurrences(p2, p);
            const auto q2occ = meshpat::occurrences(q2, p);
            const auto sigocc = meshpat::occurrences(sigma, p);
            const auto upsocc = meshpat::occurrences(upsilon, p);

            // sigma splits into p1 (prefix) and p2 occurrences, disjointly.
            std::set<std::vector<int>> sig_parts;
            bool decomp = sigocc.size() == p1occ.size() + p2occ.size() &&
                          upsocc.size() == q1occ.size() + q2occ.size();
            for (const auto& o : p1occ)
              decomp &= sig_parts.insert({o.positions[0], o.positions[1], o.positions[2]}).second;
            for (const auto& o : p2occ) decomp &= sig_parts.insert(o.positions).second;
            for (const auto& o : sigocc) decomp &= sig_parts.count(o.positions) > 0;
            if (!decomp && st.decomposition) {
              st.decomposition = false;
              st.decomposition_ex = p.str();
            }

            std::set<int> p1sec, q1sec;
            for (const auto& o : p1occ) p1sec.insert(p.at(o.positions[1]));
            for (const auto& o : q1occ) q1sec.insert(p.at(o.positions[1]));
            if ((p1sec.size() != p1occ.size() || q1sec.size() != q1occ.size()) && st.lemma) {
              st.lemma = false;
              st.lemma_ex = p.str();
            }

            const Permutation q = meshpat::involution(p);
            if (meshpat::involution(q) != p && st.self_inverse) {
              st.self_inverse = false;
              st.self_inverse_ex = p.str();
            }
            if ((meshpat::occurrence_count(p1, q) != q1occ.size() ||
                 meshpat::occurrence_count(q1, q) != p1occ.size() ||
                 meshpat::occurrence_count(p2, q) != p2occ.size()) &&
                st.counts_swap) {
              st.counts_swap = false;
              st.counts_swap_ex = p.str();
            }

            st.hist[static_cast<int>(q1occ.size() + p2occ.size())] += 1;
          });
        },
        [](InvolutionState& into, const InvolutionState& from) {
          if (into.self_inverse && !from.self_inverse) into.self_inverse_ex = from.self_inverse_ex;
          if (into.counts_swap && !from.counts_swap) into.counts_swap_ex = from.counts_swap_ex;
          if (into.decomposition && !from.decomposition)
            into.decomposition_ex = from.decomposition_ex;
          if (into.lemma && !from.lemma) into.lemma_ex = from.lemma_ex;
          into.self_inverse &= from.self_inverse;
          into.counts_swap &= from.counts_swap;
          into.decomposition &= from.decomposition;
          into.lemma &= from.lemma;
          merge_hist(into.hist, from.hist);
        });
    if (n >= 1 && dist_ok && s.hist != row_hist(fish.row(n))) {
      dist_ok = false;
      dist_ex = "n=" + std::to_string(n) + " " + hist_str(s.hist) + " vs " +
                hist_str(row_hist(fish.row(n)));
    }
    if (total.self_inverse && !s.self_inverse) total.self_inverse_ex = s.self_inverse_ex;
    if (total.counts_swap && !s.counts_swap) total.counts_swap_ex = s.counts_swap_ex;
    if (total.decomposition && !s.decomposition) total.decomposition_ex = s.decomposition_ex;
    if (total.lemma && !s.lemma) total.lemma_ex = s.lemma_ex;
    total.self_inverse &= s.self_inverse;
    total.counts_swap &= s.counts_swap;
    total.decomposition &= s.decomposition;
    total.lemma &= s.lemma;
  }

  const auto flag_check = [&out](const std::string& name, bool pass, const std::string& what,
                                 const std::string& example) {
    out.push_back(run_check(name, [pass, what, example]() -> Outcome {
      if (pass) return {true, what, what};
      return {false, what, "counterexample: " + example};
    }));
  };
  flag_check("involution/involution is self-inverse", total.self_inverse,
             "involution(involution(p)) = p for n<=" + std::to_string(N), total.self_inverse_ex);
  flag_check("involution/p1 and q1 counts swap while p2 is preserved", total.counts_swap,
             "counts exchange for n<=" + std::to_string(N), total.counts_swap_ex);
  flag_check("involution/sigma and upsilon decompose as p1+p2 and q1+q2", total.decomposition,
             "decompositions are disjoint unions for n<=" + std::to_string(N),
             total.decomposition_ex);
  flag_check("involution/second entries determine p1 and q1 occurrences", total.lemma,
             "second entries are distinct for n<=" + std::to_string(N), total.lemma_ex);
  flag_check("involution/occ(q1)+occ(p2) follows the Fishburn distribution", dist_ok,
             "statistic matches fishburn rows for n<=" + std::to_string(N), dist_ex);
}

// ---------------------------------------------------------------- bijections

void bijections_suite(std::vector<CheckResult>& out, int max_n, int) {
  const int N = bound_or(max_n, 4);
  const meshpat::MeshPattern sigma = meshpat::builtin("sigma");

  out.push_back(run_check("bijections/sigma insertion round-trips exhaustively", [&]() -> Outcome {
    for (int n = 0; n <= N; ++n) {
      bool ok = true;
      std::string ex;
      for_each_permutation(n, [&](const Permutation& p) {
        if (!ok) return;
        const auto invs = inversions(p);
        for_each_subset<InversionPair>(invs, [&](std::vector<InversionPair> marks) {
          if (!ok) return;
          const meshpat::MarkedPermutation base{p, marks, {}};
          const meshpat::MarkedPermutation image = meshpat::insert_sigma(base);
          const auto occ = meshpat::occurrences(sigma, image.perm);
          for (const auto& o : image.marked_occurrences)
            if (std::find(occ.begin(), occ.end(), o) == occ.end()) ok = false;
          meshpat::MarkedPermutation back = meshpat::remove_sigma(image);
          std::sort(marks.begin(), marks.end());
          std::sort(back.marked_inversions.begin(), back.marked_inversions.end());
          if (back.perm != p || back.marked_inversions != marks) ok = false;
          if (!ok) ex = p.str();
        });
        // the other direction: every occurrence marking is reachable
        const auto occs = meshpat::occurrences(sigma, p);
        for_each_subset<meshpat::Occurrence>(occs, [&](std::vector<meshpat::Occurrence> marks) {
          if (!ok) return;
          const meshpat::MarkedPermutation marked{p, {}, marks};
          const meshpat::MarkedPermutation back = meshpat::remove_sigma(marked);
          const meshpat::MarkedPermutation again = meshpat::insert_sigma(back);
          std::sort(marks.begin(), marks.end());
          if (again.perm != p || again.marked_occurrences != marks) ok = false;
          if (!ok) ex = p.str();
        });
      });
      if (!ok) return {false, "identity round trip at n=" + std::to_string(n), "failed at " + ex};
    }
    return {true, "round trips hold for n<=" + std::to_string(N),
            "round trips hold for n<=" + std::to_string(N)};
  }));

  out.push_back(run_check("bijections/sigma insertion reproduces the worked example",
                          [&]() -> Outcome {
    const meshpat::MarkedPermutation base{Permutation::parse("246531"),
                                          {{4, 1}, {6, 1}, {6, 5}},
                                          {}};
    const meshpat::MarkedPermutation image = meshpat::insert_sigma(base);
    const std::vector<meshpat::Occurrence> want_occ = {
        {{2, 3, 4}}, {{4, 5, 9}}, {{5, 6, 7}}};
    if (image.perm != Permutation::parse("436289751") || image.marked_occurrences != want_occ)
      return {false, "4,3,6,2,8,9,7,5,1 with occurrences (2,3,4);(4,5,9);(5,6,7)",
              image.perm.str()};
    meshpat::MarkedPermutation back = meshpat::remove_sigma(image);
    std::sort(back.marked_inversions.begin(), back.marked_inversions.end());
    const std::vector<InversionPair> want_marks = {{4, 1}, {6, 1}, {6, 5}};
    if (back.perm != base.perm || back.marked_inversions != want_marks)
      return {false, "2,4,6,5,3,1 with marks (4,1);(6,1);(6,5)", back.perm.str()};
    return {true, "worked example reproduced", "worked example reproduced"};
  }));

  out.push_back(run_check("bijections/confused-arc insertion round-trips exhaustively",
                          [&]() -> Outcome {
    for (int n = 0; n <= N; ++n) {
      bool ok = true;
      std::string ex;
      matchings::for_each_zero_alignment(n, [&](const matchings::Matching& m) {
        if (!ok) return;
        const auto openers = matchings::embraced_nested_openers(m);
        for_each_subset<matchings::EmbracedOpener>(
            openers, [&](std::vector<matchings::EmbracedOpener> marks) {
              if (!ok) return;
              const matchings::MarkedMatching base{m, marks, {}};
              const matchings::MarkedMatching image = matchings::insert_confused(base);
              if (!matchings::is_zero_alignment(image.matching)) ok = false;
              matchings::MarkedMatching back = matchings::remove_confused(image);
              std::sort(marks.begin(), marks.end());
              std::sort(back.marked_openers.begin(), back.marked_openers.end());
              if (back.matching != m || back.marked_openers != marks) ok = false;
              if (!ok) ex = m.str();
            });
        const auto confused = matchings::confused_arcs(m);
        for_each_subset<matchings::Arc>(confused, [&](std::vector<matchings::Arc> marks) {
          if (!ok) return;
          const matchings::MarkedMatching marked{m, {}, marks};
          const matchings::MarkedMatching back = matchings::remove_confused(marked);
          const matchings::MarkedMatching again = matchings::insert_confused(back);
          std::sort(marks.begin(), marks.end());
          if (again.matching != m || again.marked_confused != marks) ok = false;
          if (!ok) ex = m.str();
        });
      });
      if (!ok) return {false, "identity round trip at n=" + std::to_string(n), "failed at " + ex};
    }
    return {true, "round trips hold for semi-length<=" + std::to_string(N),
            "round trips hold for semi-length<=" + std::to_string(N)};
  }));

  out.push_back(run_check("bijections/confused-arc insertion reproduces the worked example",
                          [&]() -> Outcome {
    const matchings::Matching m = matchings::Matching::parse("(1,9)(2,12)(3,10)(4,7)(5,8)(6,11)");
    const matchings::MarkedMatching base{
        m, {{{2, 12}, 4}, {{1, 9}, 4}, {{2, 12}, 3}}, {}};
    const matchings::MarkedMatching image = matchings::insert_confused(base);
    const matchings::Matching want =
        matchings::Matching::parse("(1,12)(2,16)(3,17)(4,14)(5,18)(6,13)(7,10)(8,11)(9,15)");
    const std::vector<matchings::Arc> want_marks = {{3, 17}, {5, 18}, {6, 13}};
    if (image.matching != want || image.marked_confused != want_marks)
      return {false, want.str() + " marked (3,17)(5,18)(6,13)", image.matching.str()};
    matchings::MarkedMatching back = matchings::remove_confused(image);
    std::vector<matchings::EmbracedOpener> want_back = {{{2, 12}, 4}, {{1, 9}, 4}, {{2, 12}, 3}};
    std::sort(want_back.begin(), want_back.end());
    std::sort(back.marked_openers.begin(), back.marked_openers.end());
    if (back.matching != m || back.marked_openers != want_back)
      return {false, m.str() + " with the three embraced-opener marks", back.matching.str()};
    return {true, "worked example reproduced", "worked example reproduced"};
  }));

  out.push_back(run_check("bijections/mislabeling insertion round-trips exhaustively",
                          [&]() -> Outcome {
    for (int n = 0; n <= N; ++n) {
      bool ok = true;
      std::string ex;
      for_each_inversion_table(n, [&](const InversionTable& t) {
        if (!ok) return;
        const posets::FactorialPoset p = posets::FactorialPoset::from_inversion_table(t);
        const auto pairs = posets::incomparable_pairs(p);
        for_each_subset<posets::IncomparablePair>(
            pairs, [&](std::vector<posets::IncomparablePair> marks) {
              if (!ok) return;
              const posets::MarkedPoset base{p, marks, {}};
              const posets::MarkedPoset image = posets::insert_mislabelings(base);
              posets::MarkedPoset back = posets::remove_mislabelings(image);
              std::sort(marks.begin(), marks.end());
              std::sort(back.marked_pairs.begin(), back.marked_pairs.end());
              if (back.poset != p || back.marked_pairs != marks) ok = false;
              if (!ok) ex = p.str();
            });
        const auto mis = posets::mislabelings(p);
        for_each_subset<int>(mis, [&](std::vector<int> marks) {
          if (!ok) return;
          const posets::MarkedPoset marked{p, {}, marks};
          const posets::MarkedPoset back = posets::remove_mislabelings(marked);
          const posets::MarkedPoset again = posets::insert_mislabelings(back);
          std::sort(marks.begin(), marks.end());
          if (again.poset != p || again.marked_mislabelings != marks) ok = false;
          if (!ok) ex = p.str();
        });
      });
      if (!ok) return {false, "identity round trip at n=" + std::to_string(n), "failed at " + ex};
    }
    return {true, "round trips hold for n<=" + std::to_string(N),
            "round trips hold for n<=" + std::to_string(N)};
  }));

  out.push_back(run_check("bijections/mislabeling insertion reproduces the worked example",
                          [&]() -> Outcome {
    const posets::FactorialPoset p = posets::FactorialPoset::parse("0,1,0,3,0,0");
    const posets::MarkedPoset base{p, {{2, 3}, {1, 3}, {4, 6}, {3, 6}}, {}};
    const posets::MarkedPoset image = posets::insert_mislabelings(base);
    const std::vector<int> want_marks = {3, 4, 8, 9};
    if (image.poset != posets::FactorialPoset::parse("0,1,2,1,0,5,0,6,5,0") ||
        image.marked_mislabelings != want_marks ||
        posets::mislabelings(image.poset) != want_marks)
      return {false, "bounds 0,1,2,1,0,5,0,6,5,0 with mislabelings {3,4,8,9}", image.poset.str()};
    posets::MarkedPoset back = posets::remove_mislabelings(image);
    std::vector<posets::IncomparablePair> want_back = {{2, 3}, {1, 3}, {4, 6}, {3, 6}};
    std::sort(want_back.begin(), want_back.end());
    std::sort(back.marked_pairs.begin(), back.marked_pairs.end());
    if (back.poset != p || back.marked_pairs != want_back)
      return {false, "0,1,0,3,0,0 with pairs (2,3);(1,3);(4,6);(3,6)", back.poset.str()};
    return {true, "worked example reproduced", "worked example reproduced"};
  }));
}

// ------------------------------------------------------------------ matrices

void matrices_suite(std::vector<CheckResult>& out, int max_n, int) {
  const int N = bound_or(max_n, 6);
  const auto counts = genfun::primitive_row_matrix_counts(N);
  const genfun::Triangle unsieved = genfun::unsieved_triangle(N);

  out.push_back(run_check("matrices/matrix oracle matches the unsieved triangle", [&]() -> Outcome {
    for (int n = 1; n <= N; ++n) {
      const auto& row = unsieved.row(n);
      for (int k = 0; k < static_cast<int>(row.size()); ++k) {
        const auto it = counts.find({n, k});
        const Int got = it == counts.end() ? Int(0) : it->second;
        if (got != row[k])
          return {false, "u(" + std::to_string(n) + "," + std::to_string(k) + ")=" + row[k].str(),
                  got.str()};
      }
    }
    for (const auto& [key, count] : counts)
      if (count != unsieved.at(key.first, key.second))
        return {false,
                "no matrix count outside the triangle (n=" + std::to_string(key.first) +
                    ",k=" + std::to_string(key.second) + ")",
                count.str()};
    return {true, "oracle equals triangle for n<=" + std::to_string(N),
            "oracle equals triangle for n<=" + std::to_string(N)};
  }));

  out.push_back(run_check("matrices/matrix totals match the published row sums", [&]() -> Outcome {
    for (int n = 1; n <= N; ++n) {
      Int total = 0;
      for (const auto& [key, count] : counts)
        if (key.first == n) total += count;
      Int want = 0;
      if (n <= static_cast<int>(kUnsievedRowSums.size())) {
        want = kUnsievedRowSums[n - 1];
      } else {
        for (const Int& v : unsieved.row(n)) want += v;
      }
      if (total != want)
        return {false, "n=" + std::to_string(n) + " total " + want.str(), total.str()};
    }
    return {true, "totals match A179525 for n<=" + std::to_string(N),
            "totals match A179525 for n<=" + std::to_string(N)};
  }));
}

}  // namespace

Report run_suite(const std::string& suite, int max_n, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  Report report;
  report.suite = suite;
  const auto dispatch = [&](const std::string& name) {
    if (name == "identities")
      identities_suite(report.checks, max_n, jobs);
    else if (name == "patterns")
      patterns_suite(report.checks, max_n, jobs);
    else if (name == "matchings")
      matchings_suite(report.checks, max_n, jobs);
    else if (name == "posets")
      posets_suite(report.checks, max_n, jobs);
    else if (name == "involution")
      involution_suite(report.checks, max_n, jobs);
    else if (name == "bijections")
      bijections_suite(report.checks, max_n, jobs);
    else if (name == "matrices")
      matrices_suite(report.checks, max_n, jobs);
    else
      throw std::invalid_argument("unknown suite '" + name + "'");
  };
  if (suite == "all") {
    for (const char* name :
         {"identities", "patterns", "matchings", "posets", "involution", "bijections", "matrices"})
      dispatch(name);
  } else {
    dispatch(suite);
  }
  report.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace fishburn::verify
