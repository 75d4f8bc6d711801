#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fishburn/core.hpp"

namespace fishburn::meshpat {

// Shaded cell on the grid of a pattern of length k: (col, row) with
// 0 <= col, row <= k. Cell (a,b) is the region strictly between the a-th and
// (a+1)-th chosen positions and strictly between the b-th and (b+1)-th
// smallest chosen values, with sentinels 0 and n+1 on both axes.
using Cell = std::pair<int, int>;

class MeshPattern {
 public:
  MeshPattern() = default;
  MeshPattern(Permutation pattern, std::set<Cell> shading);

  // Grammar: perm [ "|" cell (";" cell)* ], cell := col "," row; perm is a
  // digit string (length <= 9) or comma-separated values.
  static MeshPattern parse(const std::string& text);

  const Permutation& pattern() const noexcept { return pattern_; }
  int length() const noexcept { return pattern_.size(); }
  const std::set<Cell>& shading() const noexcept { return shading_; }
  std::string str() const;  // canonical: cells sorted lexicographically

  bool operator==(const MeshPattern&) const = default;

 private:
  Permutation pattern_;
  std::set<Cell> shading_;
};

// Transcribed patterns from the source figures:
// sigma, sigma-321, sigma-132, upsilon, p1, p2, q1, q2, inv.
MeshPattern builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

struct Occurrence {
  std::vector<int> positions;  // strictly increasing, 1-based
  bool operator==(const Occurrence&) const = default;
  auto operator<=>(const Occurrence&) const = default;
};

// All occurrences, sorted lexicographically by position tuple.
std::vector<Occurrence> occurrences(const MeshPattern& pattern, const Permutation& host);
std::size_t occurrence_count(const MeshPattern& pattern, const Permutation& host);

// Exhaustive over S_n: occurrence count -> number of permutations.
std::map<int, Int> distribution(const MeshPattern& pattern, int n);

// Carrier for the marked-feature bijection; at most one marking is non-empty.
struct MarkedPermutation {
  Permutation perm;
  std::vector<InversionPair> marked_inversions;
  std::vector<Occurrence> marked_occurrences;  // sigma-occurrences

  bool operator==(const MarkedPermutation&) const = default;
};

// Inserts one entry per marked inversion, in inversion order; every inserted
// entry opens a marked sigma-occurrence. Size grows by the number of marks.
MarkedPermutation insert_sigma(const MarkedPermutation& mp);

// Exact inverse: repeatedly removes the first entry of the rightmost marked
// sigma-occurrence and standardizes, accumulating one marked inversion each.
MarkedPermutation remove_sigma(const MarkedPermutation& mp);

// Exchanges the p1- and q1-occurrence counts while preserving p2-occurrences;
// applying it twice returns the argument. The three properties are checked
// exhaustively through n = 7 by the verify suite.
Permutation involution(const Permutation& p);

}  // namespace fishburn::meshpat
