#include "fishburn/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fishburn/detail/parse.hpp"

namespace fishburn {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("values are not a rearrangement of 1.." + std::to_string(n));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) return Permutation{};
  std::vector<int> vals;
  if (text.find(',') == std::string::npos) {
    if (text.size() > 9)
      throw ParseError(9, "digit form is limited to length 9; use the comma form");
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] < '1' || text[i] > '9')
        throw ParseError(i, "expected a digit between 1 and 9");
      vals.push_back(text[i] - '0');
    }
  } else {
    std::size_t pos = 0;
    for (;;) {
      vals.push_back(detail::parse_uint(text, pos));
      if (pos == text.size()) break;
      detail::expect(text, pos, ',');
    }
  }
  try {
    return Permutation(std::move(vals));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

int Permutation::at(int pos) const {
  if (pos < 1 || pos > size()) throw std::out_of_range("position out of range");
  return values_[pos - 1];
}

int Permutation::position_of(int value) const {
  for (int i = 0; i < size(); ++i)
    if (values_[i] == value) return i + 1;
  throw std::out_of_range("value not present");
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  return os.str();
}

InversionTable::InversionTable(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int i = 0; i < static_cast<int>(entries_.size()); ++i)
    if (entries_[i] < 0 || entries_[i] > i)
      throw std::invalid_argument("entry b_" + std::to_string(i + 1) + " outside [0," +
                                  std::to_string(i) + "]");
}

InversionTable InversionTable::parse(const std::string& text) {
  if (text.empty()) return InversionTable{};
  std::vector<int> vals;
  std::size_t pos = 0;
  for (;;) {
    vals.push_back(detail::parse_uint(text, pos));
    if (pos == text.size()) break;
    detail::expect(text, pos, ',');
  }
  try {
    return InversionTable(std::move(vals));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

int InversionTable::at(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("index out of range");
  return entries_[i - 1];
}

std::string InversionTable::str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  return os.str();
}

std::vector<InversionPair> inversions(const Permutation& p) {
  std::vector<InversionPair> out;
  const auto& v = p.values();
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    std::vector<int> seconds;
    for (int j = i + 1; j < n; ++j)
      if (v[j] < v[i]) seconds.push_back(v[j]);
    std::sort(seconds.begin(), seconds.end());
    for (int s : seconds) out.push_back({v[i], s});
  }
  return out;
}

Int binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial arguments must be non-negative");
  if (k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial_u64 supports 0..20");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

Permutation permutation_at(int n, std::uint64_t index) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (index >= factorial_u64(n)) throw std::out_of_range("permutation index out of range");
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial_u64(i - 1);
    const std::uint64_t d = index / f;
    index %= f;
    out.push_back(avail[d]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(std::move(out));
}

InversionTable inversion_table_at(int n, std::uint64_t index) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (index >= factorial_u64(n)) throw std::out_of_range("table index out of range");
  std::vector<int> b(n, 0);
  for (int i = n; i >= 1; --i) {
    b[i - 1] = static_cast<int>(index % i);
    index /= i;
  }
  return InversionTable(std::move(b));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  for_each_permutation(n, 0, factorial_u64(n), fn);
}

void for_each_permutation(int n, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(const Permutation&)>& fn) {
  if (begin >= end) return;
  std::vector<int> v = permutation_at(n, begin).values();
  for (std::uint64_t i = begin; i < end; ++i) {
    fn(Permutation(v));
    std::next_permutation(v.begin(), v.end());
  }
}

void for_each_inversion_table(int n, const std::function<void(const InversionTable&)>& fn) {
  for_each_inversion_table(n, 0, factorial_u64(n), fn);
}

void for_each_inversion_table(int n, std::uint64_t begin, std::uint64_t end,
                              const std::function<void(const InversionTable&)>& fn) {
  if (begin >= end) return;
  std::vector<int> b = inversion_table_at(n, begin).entries();
  for (std::uint64_t i = begin; i < end; ++i) {
    fn(InversionTable(b));
    for (int d = n - 1; d >= 0; --d) {  // odometer with radix d+1 at slot d
      if (b[d] < d) {
        ++b[d];
        break;
      }
      b[d] = 0;
    }
  }
}

}  // namespace fishburn
