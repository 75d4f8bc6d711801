#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fishburn/core.hpp"

namespace fishburn::genfun {

// Bivariate polynomial in x (structure size) and one statistic variable, with
// the x-degree truncated at a fixed bound. Coefficients are exact integers;
// absent keys mean zero.
class TruncatedSeries {
 public:
  using Key = std::pair<int, int>;  // (x degree, statistic degree)

  explicit TruncatedSeries(int max_x_degree);
  static TruncatedSeries constant(int max_x_degree, const Int& c);
  static TruncatedSeries monomial(int max_x_degree, int x_deg, int stat_deg, const Int& c);

  int max_x_degree() const noexcept { return max_x_degree_; }
  const std::map<Key, Int>& coefficients() const noexcept { return coeff_; }
  Int coeff(int x_deg, int stat_deg) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  void add_term(int x_deg, int stat_deg, const Int& c);

  int max_x_degree_ = 0;
  std::map<Key, Int> coeff_;

  friend TruncatedSeries series_add(const TruncatedSeries&, const TruncatedSeries&);
  friend TruncatedSeries series_sub(const TruncatedSeries&, const TruncatedSeries&);
  friend TruncatedSeries series_mul(const TruncatedSeries&, const TruncatedSeries&);
};

// Exact arithmetic, truncating in x. Operands must share max_x_degree.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_pow(const TruncatedSeries& a, int exponent);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}

// [n]!_q with the series q substituted for the variable: the exact product of
// the partial geometric sums 1 + q + ... + q^(i-1) for i = 1..n.
TruncatedSeries qfact_substituted(int n, const TruncatedSeries& q);

// Number triangle with rows indexed from 0 (row 0 = [1]); trailing zeros are
// trimmed and out-of-range lookups read as zero.
class Triangle {
 public:
  Triangle() = default;
  explicit Triangle(std::vector<std::vector<Int>> rows);

  int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<Int>& row(int n) const;
  Int at(int n, int k) const;
  const std::vector<std::vector<Int>>& rows() const noexcept { return rows_; }

  bool operator==(const Triangle&) const = default;

 private:
  std::vector<std::vector<Int>> rows_;
};

// Coefficients of [n]!_q (A008302).
std::vector<Int> mahonian_row(int n);
Int mahonian(int n, int k);

// Rows 0..max_n of sum_n [n]!_{xz+1} x^n: u_{n,i} = #(structures of size n with
// i marked Fishburn features).
Triangle unsieved_triangle(int max_n);

// Rows 0..max_n of sum_n [n]!_{x(y-1)+1} x^n: the Fishburn distribution f_{n,k}.
Triangle fishburn_triangle(int max_n);

// f_n = coefficient of x^n in sum_n [n]!_{1-x} x^n (A022493), for n = 0..max_n.
std::vector<Int> fishburn_numbers(int max_n);

// u_{n,i} = sum_{j=i}^{C(n-i,2)} C(j,i) m_{n-i,j}.
Int identity_u(int n, int i);

// f_{n,k} = sum_{i=k}^{n-2} (-1)^(i+k) C(i,k) u_{n,i}; for n < 2 the direct
// expansion values apply (1 at k=0, else 0).
Int identity_f(int n, int k);

// Brute-force enumeration of upper-triangular binary matrices with no empty
// row, keyed by (entry sum n <= max_n, number of entries that are not the
// leftmost 1 of their row).
std::map<std::pair<int, int>, Int> primitive_row_matrix_counts(int max_n);

enum class TriangleFormat { Table, Csv, Json, Bfile };

// Rows `from`..row_count()-1 in the requested format. Table/CSV print one row
// per line; JSON uses {"rows":[[...]]} with coefficients as decimal strings;
// b-file linearizes the rows as "index value" lines starting at 1.
std::string format_triangle(const Triangle& t, int from, TriangleFormat format);

}  // namespace fishburn::genfun
