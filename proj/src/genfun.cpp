#include "fishburn/genfun.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fishburn::genfun {

TruncatedSeries::TruncatedSeries(int max_x_degree) : max_x_degree_(max_x_degree) {
  if (max_x_degree < 0) throw std::invalid_argument("negative truncation degree");
}

TruncatedSeries TruncatedSeries::constant(int max_x_degree, const Int& c) {
  return monomial(max_x_degree, 0, 0, c);
}

TruncatedSeries TruncatedSeries::monomial(int max_x_degree, int x_deg, int stat_deg,
                                          const Int& c) {
  TruncatedSeries s(max_x_degree);
  if (x_deg < 0 || stat_deg < 0) throw std::invalid_argument("negative degree");
  s.add_term(x_deg, stat_deg, c);
  return s;
}

Int TruncatedSeries::coeff(int x_deg, int stat_deg) const {
  auto it = coeff_.find({x_deg, stat_deg});
  return it == coeff_.end() ? Int(0) : it->second;
}

void TruncatedSeries::add_term(int x_deg, int stat_deg, const Int& c) {
  if (x_deg > max_x_degree_ || c == 0) return;
  Int& slot = coeff_[{x_deg, stat_deg}];
  slot += c;
  if (slot == 0) coeff_.erase({x_deg, stat_deg});
}

namespace {
void require_same_truncation(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.max_x_degree() != b.max_x_degree())
    throw std::invalid_argument("operands have different x-truncation degrees");
}
}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_truncation(a, b);
  TruncatedSeries r = a;
  for (const auto& [key, c] : b.coefficients()) r.add_term(key.first, key.second, c);
  return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_truncation(a, b);
  TruncatedSeries r = a;
  for (const auto& [key, c] : b.coefficients()) r.add_term(key.first, key.second, -c);
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_truncation(a, b);
  TruncatedSeries r(a.max_x_degree());
  for (const auto& [ka, ca] : a.coefficients()) {
    for (const auto& [kb, cb] : b.coefficients()) {
      const int xd = ka.first + kb.first;
      if (xd > r.max_x_degree()) continue;
      r.add_term(xd, ka.second + kb.second, ca * cb);
    }
  }
  return r;
}

TruncatedSeries series_pow(const TruncatedSeries& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  TruncatedSeries r = TruncatedSeries::constant(a.max_x_degree(), 1);
  TruncatedSeries base = a;
  int e = exponent;
  while (e > 0) {
    if (e & 1) r = series_mul(r, base);
    e >>= 1;
    if (e) base = series_mul(base, base);
  }
  return r;
}

TruncatedSeries qfact_substituted(int n, const TruncatedSeries& q) {
  if (n < 0) throw std::invalid_argument("negative size");
  const int N = q.max_x_degree();
  TruncatedSeries result = TruncatedSeries::constant(N, 1);
  TruncatedSeries geo = TruncatedSeries::constant(N, 1);   // 1 + q + ... + q^(i-1)
  TruncatedSeries qpow = TruncatedSeries::constant(N, 1);  // q^(i-1)
  for (int i = 1; i <= n; ++i) {
    if (i > 1) {
      qpow = series_mul(qpow, q);
      geo = series_add(geo, qpow);
    }
    result = series_mul(result, geo);
  }
  return result;
}

Triangle::Triangle(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
  for (auto& r : rows_)
    while (!r.empty() && r.back() == 0) r.pop_back();
}

const std::vector<Int>& Triangle::row(int n) const {
  if (n < 0 || n >= row_count()) throw std::out_of_range("row out of range");
  return rows_[n];
}

Int Triangle::at(int n, int k) const {
  if (n < 0 || n >= row_count() || k < 0 || k >= static_cast<int>(rows_[n].size())) return 0;
  return rows_[n][k];
}

std::vector<Int> mahonian_row(int n) {
  const TruncatedSeries q = TruncatedSeries::monomial(0, 0, 1, 1);
  const TruncatedSeries f = qfact_substituted(n, q);
  std::vector<Int> row(static_cast<std::size_t>(n) * (n - 1) / 2 + 1, 0);
  for (const auto& [key, c] : f.coefficients()) row[key.second] = c;
  return row;
}

Int mahonian(int n, int k) {
  if (k < 0 || k > n * (n - 1) / 2) return 0;
  return mahonian_row(n)[k];
}

namespace {

// sum_{n=0..N} [n]!_q x^n for the given substituted q, bucketed into rows by
// x-degree.
Triangle summed_qfactorial_rows(int max_n, const TruncatedSeries& q) {
  const int N = max_n;
  TruncatedSeries total = TruncatedSeries::constant(N, 1);  // n = 0 term
  TruncatedSeries qfact = TruncatedSeries::constant(N, 1);
  TruncatedSeries geo = TruncatedSeries::constant(N, 1);
  TruncatedSeries qpow = TruncatedSeries::constant(N, 1);
  for (int n = 1; n <= N; ++n) {
    if (n > 1) {
      qpow = series_mul(qpow, q);
      geo = series_add(geo, qpow);
    }
    qfact = series_mul(qfact, geo);
    total = series_add(total, series_mul(qfact, TruncatedSeries::monomial(N, n, 0, 1)));
  }
  std::vector<std::vector<Int>> rows(N + 1);
  for (const auto& [key, c] : total.coefficients()) {
    auto& row = rows[key.first];
    if (static_cast<int>(row.size()) <= key.second) row.resize(key.second + 1, 0);
    row[key.second] = c;
  }
  return Triangle(std::move(rows));
}

}  // namespace

Triangle unsieved_triangle(int max_n) {
  const TruncatedSeries q = series_add(TruncatedSeries::constant(max_n, 1),
                                       TruncatedSeries::monomial(max_n, 1, 1, 1));
  return summed_qfactorial_rows(max_n, q);
}

Triangle fishburn_triangle(int max_n) {
  // q = x(y-1) + 1 = 1 - x + xy
  TruncatedSeries q = TruncatedSeries::constant(max_n, 1);
  q = series_sub(q, TruncatedSeries::monomial(max_n, 1, 0, 1));
  q = series_add(q, TruncatedSeries::monomial(max_n, 1, 1, 1));
  return summed_qfactorial_rows(max_n, q);
}

std::vector<Int> fishburn_numbers(int max_n) {
  const TruncatedSeries q = series_sub(TruncatedSeries::constant(max_n, 1),
                                       TruncatedSeries::monomial(max_n, 1, 0, 1));
  const Triangle t = summed_qfactorial_rows(max_n, q);
  std::vector<Int> out(max_n + 1, 0);
  for (int n = 0; n <= max_n; ++n) out[n] = t.at(n, 0);
  return out;
}

Int identity_u(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("need 0 <= i <= n");
  const int m = n - i;
  const int jmax = m * (m - 1) / 2;
  const std::vector<Int> row = mahonian_row(m);
  Int total = 0;
  for (int j = i; j <= jmax; ++j) total += binomial(j, i) * row[j];
  return total;
}

Int identity_f(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("need n, k >= 0");
  if (n < 2) return k == 0 ? Int(1) : Int(0);
  Int total = 0;
  for (int i = k; i <= n - 2; ++i) {
    const Int term = binomial(i, k) * identity_u(n, i);
    if ((i + k) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

std::map<std::pair<int, int>, Int> primitive_row_matrix_counts(int max_n) {
  std::map<std::pair<int, int>, Int> counts;
  for (int m = 1; m <= max_n; ++m) {
    // Row r of an m x m upper-triangular matrix may use columns r..m; every row
    // holds at least one 1, so m rows are infeasible once the budget is short.
    std::function<void(int, int, int)> rec = [&](int r, int sum, int extra) {
      if (sum + (m - r + 1) > max_n) return;
      const int width = m - r + 1;
      for (unsigned mask = 1; mask < (1u << width); ++mask) {
        int ones = 0, not_first = 0;
        bool seen_first = false;
        for (int c = 0; c < width; ++c) {
          if (mask & (1u << c)) {
            ++ones;
            if (seen_first) ++not_first;
            seen_first = true;
          }
        }
        if (r == m) {
          counts[{sum + ones, extra + not_first}] += 1;
        } else {
          rec(r + 1, sum + ones, extra + not_first);
        }
      }
    };
    rec(1, 0, 0);
  }
  return counts;
}

std::string format_triangle(const Triangle& t, int from, TriangleFormat format) {
  if (from < 0 || from > t.row_count()) throw std::invalid_argument("row offset out of range");
  std::ostringstream os;
  switch (format) {
    case TriangleFormat::Table:
    case TriangleFormat::Csv: {
      const char* sep = format == TriangleFormat::Table ? " " : ",";
      for (int n = from; n < t.row_count(); ++n) {
        const auto& row = t.row(n);
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (k) os << sep;
          os << row[k];
        }
        os << '\n';
      }
      break;
    }
    case TriangleFormat::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (int n = from; n < t.row_count(); ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& v : t.row(n)) row.push_back(v.str());
        rows.push_back(std::move(row));
      }
      nlohmann::json doc;
      doc["rows"] = std::move(rows);
      os << doc.dump() << '\n';
      break;
    }
    case TriangleFormat::Bfile: {
      std::uint64_t index = 1;
      for (int n = from; n < t.row_count(); ++n)
        for (const auto& v : t.row(n)) os << index++ << ' ' << v << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace fishburn::genfun
