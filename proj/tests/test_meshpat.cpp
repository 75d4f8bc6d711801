#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fishburn/genfun.hpp"
#include "fishburn/meshpat.hpp"

using namespace fishburn;
using namespace fishburn::meshpat;

namespace {
std::map<int, Int> hist_of(std::initializer_list<std::pair<int, long long>> entries) {
  std::map<int, Int> h;
  for (const auto& [k, v] : entries) h[k] = v;
  return h;
}
}  // namespace

TEST_CASE("pattern DSL parses and round-trips") {
  const MeshPattern sigma = MeshPattern::parse("231|1,0;1,1;1,2;1,3;0,1;2,1;3,1");
  CHECK(sigma == builtin("sigma"));
  CHECK(sigma.shading().size() == 7);
  // canonical printer sorts cells; reparsing is the identity
  CHECK(sigma.str() == "231|0,1;1,0;1,1;1,2;1,3;2,1;3,1");
  CHECK(MeshPattern::parse(sigma.str()) == sigma);

  const MeshPattern inv = MeshPattern::parse("21");
  CHECK(inv == builtin("inv"));
  CHECK(inv.str() == "21");

  CHECK(MeshPattern::parse("2,1|2,2") == MeshPattern::parse("21|2,2"));

  CHECK_THROWS_AS(MeshPattern::parse("21|5,0"), ParseError);
  CHECK_THROWS_AS(MeshPattern::parse("21|0,9"), ParseError);
  CHECK_THROWS_AS(MeshPattern::parse("21|"), ParseError);
  CHECK_THROWS_AS(MeshPattern::parse("21|1"), ParseError);
  CHECK_THROWS_AS(MeshPattern::parse("212"), ParseError);
}

TEST_CASE("builtin transcriptions") {
  CHECK(builtin("sigma").shading().size() == 7);
  CHECK(builtin("sigma").pattern() == Permutation({2, 3, 1}));
  CHECK(builtin("sigma-321").pattern() == Permutation({3, 1, 2}));
  CHECK(builtin("sigma-321").shading() == builtin("sigma").shading());
  CHECK(builtin("sigma-132").pattern() == Permutation({1, 3, 2}));
  CHECK(builtin("upsilon").shading().size() == 7);
  CHECK(builtin("p1").shading().size() == 11);
  CHECK(builtin("q1").shading().size() == 11);
  CHECK(builtin("p2").shading().size() == 8);
  CHECK(builtin("q2").shading().size() == 8);
  CHECK(builtin("inv").shading().empty());
  CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
}

TEST_CASE("occurrences respect the shaded regions") {
  // 4671253 contains the classical 132 four times; the mesh keeps 465 and 253
  const Permutation host = Permutation::parse("4671253");
  const auto occ = occurrences(builtin("sigma-132"), host);
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].positions == std::vector<int>{1, 2, 6});
  CHECK(occ[1].positions == std::vector<int>{5, 6, 7});

  CHECK(occurrences(builtin("sigma"), Permutation{}).empty());

  // 231 is the unique member of S_3 with a sigma-occurrence
  int with_occurrence = 0;
  for_each_permutation(3, [&](const Permutation& p) {
    const auto o = occurrences(builtin("sigma"), p);
    if (!o.empty()) {
      ++with_occurrence;
      CHECK(p == Permutation::parse("231"));
      CHECK(o.size() == 1);
      CHECK(o[0].positions == std::vector<int>{1, 2, 3});
    }
  });
  CHECK(with_occurrence == 1);
}

TEST_CASE("distributions over S_n") {
  CHECK(distribution(builtin("sigma"), 3) == hist_of({{0, 5}, {1, 1}}));
  CHECK(distribution(builtin("sigma"), 4) == hist_of({{0, 15}, {1, 9}}));
  CHECK(distribution(builtin("inv"), 3) == hist_of({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
  CHECK(distribution(builtin("sigma"), 0) == hist_of({{0, 1}}));

  // equidistribution of the three intro patterns and upsilon, small sizes
  for (int n = 1; n <= 5; ++n) {
    const auto base = distribution(builtin("sigma"), n);
    CHECK(distribution(builtin("sigma-321"), n) == base);
    CHECK(distribution(builtin("sigma-132"), n) == base);
    CHECK(distribution(builtin("upsilon"), n) == base);
  }

  // Fishburn rows, exhaustively for small n
  const genfun::Triangle fish = genfun::fishburn_triangle(6);
  for (int n = 1; n <= 6; ++n) {
    std::map<int, Int> want;
    for (int k = 0; k < static_cast<int>(fish.row(n).size()); ++k)
      if (fish.at(n, k) != 0) want[k] = fish.at(n, k);
    CHECK(distribution(builtin("sigma"), n) == want);
  }
}

TEST_CASE("sigma insertion follows the worked example") {
  MarkedPermutation base;
  base.perm = Permutation::parse("246531");
  base.marked_inversions = {{4, 1}, {6, 1}, {6, 5}};
  const MarkedPermutation image = insert_sigma(base);
  CHECK(image.perm == Permutation::parse("436289751"));
  // inserted entries 3, 2, 8 sit at positions 2, 4, 5 and open marked occurrences
  const std::vector<Occurrence> want = {{{2, 3, 4}}, {{4, 5, 9}}, {{5, 6, 7}}};
  CHECK(image.marked_occurrences == want);

  MarkedPermutation back = remove_sigma(image);
  CHECK(back.perm == base.perm);
  std::sort(back.marked_inversions.begin(), back.marked_inversions.end());
  CHECK(back.marked_inversions == base.marked_inversions);
}

TEST_CASE("sigma insertion edge cases") {
  const Permutation p = Permutation::parse("3142");
  const MarkedPermutation nothing = insert_sigma({p, {}, {}});
  CHECK(nothing.perm == p);
  CHECK(nothing.marked_occurrences.empty());

  const MarkedPermutation single = insert_sigma({Permutation::parse("21"), {{2, 1}}, {}});
  CHECK(single.perm == Permutation::parse("231"));
  REQUIRE(single.marked_occurrences.size() == 1);
  CHECK(single.marked_occurrences[0].positions == std::vector<int>{1, 2, 3});
  const MarkedPermutation undone = remove_sigma(single);
  CHECK(undone.perm == Permutation::parse("21"));
  CHECK(undone.marked_inversions == std::vector<InversionPair>{{2, 1}});

  CHECK_THROWS_AS(insert_sigma({p, {{1, 3}}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(remove_sigma({p, {}, {{{1, 2, 3}}}}), std::invalid_argument);
}

TEST_CASE("sigma round trip is exhaustive over S_4 mark subsets") {
  for (int n = 0; n <= 4; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const auto invs = inversions(p);
      const std::size_t m = invs.size();
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<InversionPair> marks;
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (1u << i)) marks.push_back(invs[i]);
        const MarkedPermutation image = insert_sigma({p, marks, {}});
        CHECK(image.perm.size() == n + static_cast<int>(marks.size()));
        MarkedPermutation back = remove_sigma(image);
        std::sort(back.marked_inversions.begin(), back.marked_inversions.end());
        std::sort(marks.begin(), marks.end());
        CHECK(back.perm == p);
        CHECK(back.marked_inversions == marks);
      }
    });
  }
}

TEST_CASE("marked occurrences survive insertion for n <= 5") {
  const MeshPattern sigma = builtin("sigma");
  for (int n = 0; n <= 5; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const auto invs = inversions(p);
      const std::size_t m = invs.size();
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<InversionPair> marks;
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (1u << i)) marks.push_back(invs[i]);
        const MarkedPermutation image = insert_sigma({p, marks, {}});
        const auto occ = occurrences(sigma, image.perm);
        for (const auto& o : image.marked_occurrences)
          CHECK(std::find(occ.begin(), occ.end(), o) != occ.end());
      }
    });
  }
}

TEST_CASE("involution basics") {
  CHECK(involution(Permutation::parse("123")) == Permutation::parse("123"));

  // 3421: its unique p1-occurrence and unique q1-occurrence share the second
  // entry 4, so nothing moves
  const Permutation fixed = Permutation::parse("3421");
  const auto p1occ = occurrences(builtin("p1"), fixed);
  const auto q1occ = occurrences(builtin("q1"), fixed);
  REQUIRE(p1occ.size() == 1);
  REQUIRE(q1occ.size() == 1);
  CHECK(fixed.at(p1occ[0].positions[1]) == 4);
  CHECK(fixed.at(q1occ[0].positions[1]) == 4);
  CHECK(involution(fixed) == fixed);
}

TEST_CASE("involution moves a parked entry across its frame") {
  // 352641 has a paired frame (3,2) and an unpaired one (5,4): the entry 6
  // crosses from before the 4 to after the 5 and back.
  const Permutation p = Permutation::parse("352641");
  const Permutation q = involution(p);
  CHECK(q == Permutation::parse("356241"));
  CHECK(involution(q) == p);

  // a stacked run unwinds one layer at a time
  const Permutation stacked = Permutation::parse("415632");
  CHECK(involution(stacked) == Permutation::parse("456132"));
  CHECK(involution(involution(stacked)) == stacked);
}

TEST_CASE("involution swaps p1/q1 and preserves p2 over S_6") {
  const MeshPattern p1 = builtin("p1");
  const MeshPattern q1 = builtin("q1");
  const MeshPattern p2 = builtin("p2");
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const Permutation q = involution(p);
      CHECK(involution(q) == p);
      CHECK(occurrence_count(p1, q) == occurrence_count(q1, p));
      CHECK(occurrence_count(q1, q) == occurrence_count(p1, p));
      CHECK(occurrence_count(p2, q) == occurrence_count(p2, p));
    });
  }
}

TEST_CASE("sigma and upsilon decompose through p1/p2 and q1/q2 for n <= 6") {
  const MeshPattern sigma = builtin("sigma");
  const MeshPattern upsilon = builtin("upsilon");
  const MeshPattern p1 = builtin("p1");
  const MeshPattern p2 = builtin("p2");
  const MeshPattern q1 = builtin("q1");
  const MeshPattern q2 = builtin("q2");
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const auto sig = occurrences(sigma, p);
      const auto a = occurrences(p1, p);
      const auto b = occurrences(p2, p);
      CHECK(sig.size() == a.size() + b.size());
      std::set<std::vector<int>> parts;
      for (const auto& o : a)
        CHECK(parts.insert({o.positions[0], o.positions[1], o.positions[2]}).second);
      for (const auto& o : b) CHECK(parts.insert(o.positions).second);
      for (const auto& o : sig) CHECK(parts.count(o.positions) == 1);
      CHECK(occurrence_count(upsilon, p) ==
            occurrence_count(q1, p) + occurrence_count(q2, p));
    });
  }
}
