#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fishburn/genfun.hpp"

using namespace fishburn;
using namespace fishburn::genfun;

namespace {
std::vector<Int> row(std::initializer_list<long long> values) {
  return std::vector<Int>(values.begin(), values.end());
}
}  // namespace

TEST_CASE("series arithmetic truncates in x") {
  const TruncatedSeries one = TruncatedSeries::constant(1, 1);
  const TruncatedSeries x = TruncatedSeries::monomial(1, 1, 0, 1);
  CHECK(series_mul(series_add(one, x), series_sub(one, x)) == one);  // x^2 truncated away

  const TruncatedSeries a = TruncatedSeries::monomial(3, 2, 1, 5);
  CHECK(series_mul(a, TruncatedSeries::constant(3, 1)) == a);

  // (x(y-1)+1)^2 at N=2: 1 + 2x(y-1) + x^2(y-1)^2
  TruncatedSeries q = TruncatedSeries::constant(2, 1);
  q = series_sub(q, TruncatedSeries::monomial(2, 1, 0, 1));
  q = series_add(q, TruncatedSeries::monomial(2, 1, 1, 1));
  const TruncatedSeries sq = series_pow(q, 2);
  CHECK(sq.coeff(0, 0) == 1);
  CHECK(sq.coeff(1, 0) == -2);
  CHECK(sq.coeff(1, 1) == 2);
  CHECK(sq.coeff(2, 0) == 1);
  CHECK(sq.coeff(2, 1) == -2);
  CHECK(sq.coeff(2, 2) == 1);

  CHECK_THROWS_AS(series_add(one, TruncatedSeries::constant(2, 1)), std::invalid_argument);
}

TEST_CASE("q-factorial substitution") {
  const TruncatedSeries anything = TruncatedSeries::monomial(4, 1, 1, 7);
  CHECK(qfact_substituted(0, anything) == TruncatedSeries::constant(4, 1));

  const TruncatedSeries q = TruncatedSeries::monomial(0, 0, 1, 1);
  const TruncatedSeries cube = qfact_substituted(3, q);
  CHECK(cube.coeff(0, 0) == 1);
  CHECK(cube.coeff(0, 1) == 2);
  CHECK(cube.coeff(0, 2) == 2);
  CHECK(cube.coeff(0, 3) == 1);

  // [2]!_{x(y-1)+1} = 2 + x(y-1)
  TruncatedSeries sub = TruncatedSeries::constant(2, 1);
  sub = series_sub(sub, TruncatedSeries::monomial(2, 1, 0, 1));
  sub = series_add(sub, TruncatedSeries::monomial(2, 1, 1, 1));
  const TruncatedSeries two = qfact_substituted(2, sub);
  CHECK(two.coeff(0, 0) == 2);
  CHECK(two.coeff(1, 0) == -1);
  CHECK(two.coeff(1, 1) == 1);
}

TEST_CASE("mahonian rows match the figure") {
  CHECK(mahonian_row(0) == row({1}));
  CHECK(mahonian_row(4) == row({1, 3, 5, 6, 5, 3, 1}));
  CHECK(mahonian_row(6) == row({1, 5, 14, 29, 49, 71, 90, 101, 101, 90, 71, 49, 29, 14, 5, 1}));
  for (int n = 0; n <= 9; ++n) CHECK(mahonian(n, 0) == 1);
  CHECK(mahonian(5, 99) == 0);
}

TEST_CASE("unsieved triangle matches the figure") {
  const Triangle t = unsieved_triangle(9);
  CHECK(t.row(0) == row({1}));
  CHECK(t.row(5) == row({120, 72, 5}));
  CHECK(t.row(6) == row({720, 600, 98, 1}));
  CHECK(t.row(9) == row({362880, 564480, 279300, 48750, 2299, 9}));

  const std::vector<long long> sums = {1, 2, 7, 33, 197, 1419, 11966};
  for (int n = 1; n <= 7; ++n) {
    Int s = 0;
    for (const Int& v : t.row(n)) s += v;
    CHECK(s == sums[n - 1]);
  }
}

TEST_CASE("fishburn triangle matches the figure") {
  const Triangle t = fishburn_triangle(9);
  CHECK(t.row(3) == row({5, 1}));
  CHECK(t.row(5) == row({53, 62, 5}));
  CHECK(t.row(9) == row({31240, 142979, 146754, 39644, 2254, 9}));
  for (int n = 1; n <= 6; ++n) {
    Int s = 0;
    for (const Int& v : t.row(n)) s += v;
    CHECK(s == factorial(n));
  }
}

TEST_CASE("fishburn numbers") {
  const std::vector<Int> f = fishburn_numbers(12);
  const std::vector<long long> expect = {1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240};
  for (int n = 0; n <= 9; ++n) CHECK(f[n] == expect[n]);

  const Triangle t = fishburn_triangle(12);
  for (int n = 0; n <= 12; ++n) CHECK(t.at(n, 0) == f[n]);
}

TEST_CASE("identities against the expanded triangles") {
  CHECK(identity_u(5, 1) == 72);
  CHECK(identity_u(3, 1) == 1);
  for (int n = 0; n <= 8; ++n) CHECK(identity_u(n, 0) == factorial(n));

  CHECK(identity_f(5, 0) == 53);
  CHECK(identity_f(5, 1) == 62);
  CHECK(identity_f(6, 3) == 1);
  CHECK(identity_f(0, 0) == 1);
  CHECK(identity_f(1, 0) == 1);
  CHECK(identity_f(1, 1) == 0);
  CHECK(identity_f(7, 6) == 0);  // beyond n-2: empty sum

  const Triangle u = unsieved_triangle(12);
  const Triangle f = fishburn_triangle(12);
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(u.at(n, k) == identity_u(n, k));
      CHECK(f.at(n, k) == identity_f(n, k));
    }
}

TEST_CASE("primitive row matrix oracle") {
  const auto counts = primitive_row_matrix_counts(6);
  CHECK(counts.at({1, 0}) == 1);
  CHECK(counts.at({3, 0}) == 6);
  CHECK(counts.at({3, 1}) == 1);
  const Triangle u = unsieved_triangle(6);
  for (const auto& [key, count] : counts) CHECK(count == u.at(key.first, key.second));
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < static_cast<int>(u.row(n).size()); ++k) {
      const auto it = counts.find({n, k});
      CHECK((it == counts.end() ? Int(0) : it->second) == u.at(n, k));
    }
}

TEST_CASE("triangle formatting") {
  const Triangle t = fishburn_triangle(5);
  CHECK(format_triangle(t, 1, TriangleFormat::Table) == "1\n2\n5 1\n15 9\n53 62 5\n");
  CHECK(format_triangle(t, 4, TriangleFormat::Csv) == "15,9\n53,62,5\n");
  CHECK(format_triangle(t, 4, TriangleFormat::Bfile) == "1 15\n2 9\n3 53\n4 62\n5 5\n");
  CHECK(format_triangle(t, 4, TriangleFormat::Json) ==
        "{\"rows\":[[\"15\",\"9\"],[\"53\",\"62\",\"5\"]]}\n");
}
