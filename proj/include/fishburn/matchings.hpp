#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fishburn/core.hpp"

namespace fishburn::matchings {

struct Arc {
  int opener = 0;
  int closer = 0;
  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

// Perfect matching of [2m]: every point lies on exactly one arc and each arc
// opens before it closes. Arcs are kept sorted by opener.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Arc> arcs);

  // Grammar: "(1,9)(2,12)(3,10)"; the empty string is the empty matching.
  static Matching parse(const std::string& text);

  int semilength() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::string str() const;

  bool operator==(const Matching&) const = default;
  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<Arc> arcs_;
};

struct ArcFlags {
  bool nesting = false, nested = false;
  bool left_nesting = false, left_nested = false;
  bool right_nesting = false, right_nested = false;
  bool crossing = false, crossed = false;
  bool left_crossing = false, left_crossed = false;
  bool right_crossing = false, right_crossed = false;
  bool operator==(const ArcFlags&) const = default;
};

// Recursive slot construction: the i-th inserted arc nests exactly b_i arcs.
// The result is always a zero-alignment matching.
Matching from_inversion_table(const InversionTable& t);

// True iff no two arcs (i,j),(k,l) satisfy i<j<k<l; equivalently every opener
// precedes every closer.
bool is_zero_alignment(const Matching& m);

std::map<Arc, ArcFlags> classify(const Matching& m);
std::string classification_csv(const Matching& m);

// Arcs that are simultaneously left-nesting and right-crossed.
std::vector<Arc> confused_arcs(const Matching& m);

// Number of pairs (A,B) with A nesting B.
int nesting_pair_count(const Matching& m);

// ((i,j), k): k opens an arc strictly nested inside (i,j).
struct EmbracedOpener {
  Arc nesting_arc;
  int opener = 0;
  bool operator==(const EmbracedOpener&) const = default;
  auto operator<=>(const EmbracedOpener&) const = default;
};

// All embraced nested openers, sorted by descending opener k, ties broken by
// descending closer of the nesting arc.
std::vector<EmbracedOpener> embraced_nested_openers(const Matching& m);

struct MarkedMatching {
  Matching matching;
  std::vector<EmbracedOpener> marked_openers;
  std::vector<Arc> marked_confused;
  bool operator==(const MarkedMatching&) const = default;
};

// Inserts one confused arc per marked embraced opener, processed in embraced
// order: the new arc opens immediately left of k and closes immediately right
// of the nesting arc's closer.
MarkedMatching insert_confused(const MarkedMatching& mm);

// Exact inverse of insert_confused on its image; rejects markings outside it.
MarkedMatching remove_confused(const MarkedMatching& mm);

// The n! zero-alignment matchings, in inversion-table order.
Matching zero_alignment_at(int n, std::uint64_t index);
void for_each_zero_alignment(int n, const std::function<void(const Matching&)>& fn);

}  // namespace fishburn::matchings
