#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fishburn/core.hpp"
#include "fishburn/genfun.hpp"

using namespace fishburn;

TEST_CASE("permutation validation and serialization") {
  const Permutation p = Permutation::parse("246531");
  CHECK(p.size() == 6);
  CHECK(p.at(1) == 2);
  CHECK(p.position_of(1) == 6);
  CHECK(p.str() == "2,4,6,5,3,1");
  CHECK(Permutation::parse("2,4,6,5,3,1") == p);
  CHECK(Permutation::parse("") == Permutation{});

  CHECK_THROWS_AS(Permutation::parse("121"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("1,2,4"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("1,x"), ParseError);
  CHECK_THROWS_AS(Permutation({2, 2}), std::invalid_argument);
}

TEST_CASE("inversion order follows position then second value") {
  const Permutation p = Permutation::parse("246531");
  const auto inv = inversions(p);
  CHECK(inv.size() == 9);

  // the subset the processing order is defined on
  std::vector<InversionPair> subset;
  for (const auto& pair : inv)
    if (pair == InversionPair{4, 1} || pair == InversionPair{6, 1} || pair == InversionPair{6, 5})
      subset.push_back(pair);
  CHECK(subset == std::vector<InversionPair>{{4, 1}, {6, 1}, {6, 5}});

  CHECK(inversions(Permutation{}).empty());
  CHECK(inversions(Permutation::parse("132")) == std::vector<InversionPair>{{3, 2}});
}

TEST_CASE("inversion tables enumerate lexicographically") {
  std::vector<InversionTable> tables;
  for_each_inversion_table(2, [&](const InversionTable& t) { tables.push_back(t); });
  CHECK(tables == std::vector<InversionTable>{InversionTable({0, 0}), InversionTable({0, 1})});

  int count0 = 0;
  for_each_inversion_table(0, [&](const InversionTable& t) {
    CHECK(t.size() == 0);
    ++count0;
  });
  CHECK(count0 == 1);

  std::set<InversionTable> seen;
  for_each_inversion_table(4, [&](const InversionTable& t) { seen.insert(t); });
  CHECK(seen.size() == 24);

  CHECK_THROWS_AS(InversionTable({1}), std::invalid_argument);
  CHECK(InversionTable::parse("0,1,0,3,0,0").at(4) == 3);
  CHECK(InversionTable::parse("0,1,0,3,0,0").str() == "0,1,0,3,0,0");
}

TEST_CASE("streams are restartable via unranking") {
  const int n = 5;
  std::vector<Permutation> whole;
  for_each_permutation(n, [&](const Permutation& p) { whole.push_back(p); });
  CHECK(whole.size() == 120);
  for (std::uint64_t idx : {0ull, 17ull, 119ull}) CHECK(permutation_at(n, idx) == whole[idx]);

  std::vector<Permutation> part;
  for_each_permutation(n, 40, 60, [&](const Permutation& p) { part.push_back(p); });
  CHECK(std::equal(part.begin(), part.end(), whole.begin() + 40));

  std::vector<InversionTable> tables;
  for_each_inversion_table(n, [&](const InversionTable& t) { tables.push_back(t); });
  for (std::uint64_t idx : {0ull, 63ull, 119ull}) CHECK(inversion_table_at(n, idx) == tables[idx]);
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == Int("118264581564861424"));
  CHECK(factorial(0) == 1);
  CHECK(factorial(21) == Int("51090942171709440000"));
  CHECK(factorial_u64(10) == 3628800);
}

TEST_CASE("inversion counts are Mahonian") {
  for (int n = 0; n <= 8; ++n) {
    std::vector<Int> hist(n * (n - 1) / 2 + 1, 0);
    for_each_permutation(n, [&](const Permutation& p) {
      hist[inversions(p).size()] += 1;
    });
    CHECK(hist.back() == 1);  // C(n,2) attained by the decreasing permutation only
    CHECK(hist == genfun::mahonian_row(n));
  }
}
