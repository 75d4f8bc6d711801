#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fishburn {

using Int = boost::multiprecision::cpp_int;

// Thrown on malformed textual input; offset() is the byte position of the defect.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A rearrangement of {1,...,n}. Positions are 1-based throughout; "position 0"
// exists only as an insertion slot meaning "insert so the entry becomes index 1".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  // Accepts "2,4,6,5,3,1", or the compact digit form "246531" for n <= 9.
  static Permutation parse(const std::string& text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int at(int pos) const;           // 1-based position -> value
  int position_of(int value) const;  // value -> 1-based position
  const std::vector<int>& values() const noexcept { return values_; }
  std::string str() const;  // canonical comma-separated form

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

// An inversion (a_i, a_j): a_i sits left of a_j and a_i > a_j. Stored by value,
// as the host permutation's entries get relabeled by the insertion procedures.
struct InversionPair {
  int first = 0;
  int second = 0;
  bool operator==(const InversionPair&) const = default;
  auto operator<=>(const InversionPair&) const = default;
};

// b_1..b_n with 0 <= b_i <= i-1; in bijection with S_n.
class InversionTable {
 public:
  InversionTable() = default;
  explicit InversionTable(std::vector<int> entries);
  static InversionTable parse(const std::string& text);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int at(int i) const;  // 1-based
  const std::vector<int>& entries() const noexcept { return entries_; }
  std::string str() const;

  bool operator==(const InversionTable&) const = default;
  auto operator<=>(const InversionTable&) const = default;

 private:
  std::vector<int> entries_;
};

// All inversions of p, sorted by position of the first entry, ties broken by
// ascending value of the second entry.
std::vector<InversionPair> inversions(const Permutation& p);

Int binomial(int n, int k);  // C(n,k); 0 when k > n
Int factorial(int n);
std::uint64_t factorial_u64(int n);  // n <= 20

// Deterministic, restartable streams in lexicographic order of the value
// sequence. The ranged forms let exhaustive scans be partitioned by index.
Permutation permutation_at(int n, std::uint64_t index);
InversionTable inversion_table_at(int n, std::uint64_t index);

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
void for_each_permutation(int n, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(const Permutation&)>& fn);
void for_each_inversion_table(int n, const std::function<void(const InversionTable&)>& fn);
void for_each_inversion_table(int n, std::uint64_t begin, std::uint64_t end,
                              const std::function<void(const InversionTable&)>& fn);

}  // namespace fishburn
