#pragma once

#include <string>
#include <vector>

#include "fishburn/core.hpp"

namespace fishburn::posets {

// Factorial poset on [n], stored as the predecessor-bound vector b_1..b_n with
// Pre(k) = [1, b_k]. The bounds form makes the factorial condition hold by
// construction.
class FactorialPoset {
 public:
  FactorialPoset() = default;
  explicit FactorialPoset(std::vector<int> bounds);
  static FactorialPoset from_inversion_table(const InversionTable& t);
  static FactorialPoset parse(const std::string& text);  // "0,1,0,3,0,0"

  int size() const noexcept { return static_cast<int>(bounds_.size()); }
  int bound(int k) const;   // b_k, 1-based
  bool leq(int i, int j) const;  // i <_P j, i.e. i <= b_j
  int pre_count(int i) const;    // |Pre(i)| = b_i
  int suc_count(int i) const;    // |Suc(i)| = #{k : b_k >= i}
  const std::vector<int>& bounds() const noexcept { return bounds_; }
  InversionTable to_inversion_table() const;
  std::string str() const;

  bool operator==(const FactorialPoset&) const = default;
  auto operator<=>(const FactorialPoset&) const = default;

 private:
  std::vector<int> bounds_;
};

// Arbitrary strict partial order on [n]; exists so the interval-order and
// (2+2)-freeness checks can also run on non-factorial relations.
class GenericPoset {
 public:
  GenericPoset() = default;
  GenericPoset(int n, std::vector<std::vector<bool>> less);
  static GenericPoset parse(const std::string& text);  // "6|1<2,2<4,3<4"

  int size() const noexcept { return n_; }
  bool less(int i, int j) const;  // 1-based
  std::string str() const;

  bool operator==(const GenericPoset&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<bool>> less_;
};

GenericPoset to_generic(const FactorialPoset& p);

// Predecessor sets form a chain under inclusion.
bool is_interval_order(const GenericPoset& q);
// No induced subposet isomorphic to two disjoint 2-chains. Agrees with
// is_interval_order on every input.
bool is_two_plus_two_free(const GenericPoset& q);

struct IncomparablePair {
  int i = 0;
  int j = 0;  // i <_U j and i is not below j in the poset
  bool operator==(const IncomparablePair&) const = default;
  auto operator<=>(const IncomparablePair&) const = default;
};

// All incomparable pairs, sorted by ascending j, ties broken by descending i.
std::vector<IncomparablePair> incomparable_pairs(const FactorialPoset& p);

// Labels i in [n-1] with pre(i) > pre(i+1) and suc(i) <= suc(i+1).
std::vector<int> mislabelings(const FactorialPoset& p);

// No mislabelings: the unique representative of its isomorphism class.
bool is_canonical(const FactorialPoset& p);

// Brute force over all n! relabelings; intended for small n.
bool isomorphic(const FactorialPoset& a, const FactorialPoset& b);

struct MarkedPoset {
  FactorialPoset poset;
  std::vector<IncomparablePair> marked_pairs;
  std::vector<int> marked_mislabelings;
  bool operator==(const MarkedPoset&) const = default;
};

// Inserts one element per marked pair, in pair order: the element takes label
// j, predecessor set [1,i] and the successor set of the old j; it is a
// mislabeling of the result.
MarkedPoset insert_mislabelings(const MarkedPoset& mp);

// Exact inverse: repeatedly removes the largest marked mislabeling and records
// the induced incomparable pair in post-removal labels.
MarkedPoset remove_mislabelings(const MarkedPoset& mp);

}  // namespace fishburn::posets
