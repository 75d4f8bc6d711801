#include "fishburn/meshpat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fishburn/detail/parse.hpp"

namespace fishburn::meshpat {

MeshPattern::MeshPattern(Permutation pattern, std::set<Cell> shading)
    : pattern_(std::move(pattern)), shading_(std::move(shading)) {
  const int k = pattern_.size();
  for (const auto& [c, r] : shading_)
    if (c < 0 || c > k || r < 0 || r > k)
      throw std::invalid_argument("shaded cell outside the (k+1) x (k+1) grid");
}

MeshPattern MeshPattern::parse(const std::string& text) {
  const std::size_t bar = text.find('|');
  const std::string perm_part = bar == std::string::npos ? text : text.substr(0, bar);
  Permutation pat;
  try {
    pat = Permutation::parse(perm_part);
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), e.what());
  }
  const int k = pat.size();
  std::set<Cell> cells;
  if (bar != std::string::npos) {
    std::size_t pos = bar + 1;
    for (;;) {
      const std::size_t cell_at = pos;
      const int col = detail::parse_uint(text, pos);
      detail::expect(text, pos, ',');
      const int row = detail::parse_uint(text, pos);
      if (col > k) throw ParseError(cell_at, "cell column exceeds pattern length");
      if (row > k) throw ParseError(cell_at, "cell row exceeds pattern length");
      cells.insert({col, row});
      if (pos == text.size()) break;
      detail::expect(text, pos, ';');
    }
  }
  return MeshPattern(std::move(pat), std::move(cells));
}

std::string MeshPattern::str() const {
  std::ostringstream os;
  if (length() <= 9) {
    for (int v : pattern_.values()) os << v;
  } else {
    os << pattern_.str();
  }
  if (!shading_.empty()) {
    os << '|';
    bool first = true;
    for (const auto& [c, r] : shading_) {  // std::set iterates in lexicographic order
      if (!first) os << ';';
      os << c << ',' << r;
      first = false;
    }
  }
  return os.str();
}

namespace {

std::set<Cell> full_col(int c, int k) {
  std::set<Cell> s;
  for (int r = 0; r <= k; ++r) s.insert({c, r});
  return s;
}

std::set<Cell> full_row(int r, int k) {
  std::set<Cell> s;
  for (int c = 0; c <= k; ++c) s.insert({c, r});
  return s;
}

std::set<Cell> merged(std::set<Cell> a, const std::set<Cell>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

MeshPattern builtin(const std::string& name) {
  const std::set<Cell> cross31 = merged(full_col(1, 3), full_row(1, 3));
  if (name == "sigma") return MeshPattern(Permutation({2, 3, 1}), cross31);
  // sigma's inverse pattern; the cross shading is its own transpose
  if (name == "sigma-321") return MeshPattern(Permutation({3, 1, 2}), cross31);
  if (name == "sigma-132") return MeshPattern(Permutation({1, 3, 2}), cross31);
  const std::set<Cell> cross21 = merged(full_col(2, 3), full_row(1, 3));
  if (name == "upsilon") return MeshPattern(Permutation({2, 3, 1}), cross21);
  if (name == "p2") return MeshPattern(Permutation({2, 3, 1}), merged(cross31, {{3, 0}}));
  if (name == "q2") return MeshPattern(Permutation({2, 3, 1}), merged(cross21, {{3, 0}}));
  if (name == "p1")
    return MeshPattern(Permutation({3, 4, 2, 1}),
                       merged(full_col(1, 4), {{0, 2}, {2, 2}, {3, 2}, {4, 2}, {4, 0}, {4, 1}}));
  if (name == "q1")
    return MeshPattern(Permutation({3, 4, 2, 1}),
                       merged(full_col(2, 4), {{0, 2}, {1, 2}, {3, 2}, {4, 2}, {4, 0}, {4, 1}}));
  if (name == "inv") return MeshPattern(Permutation({2, 1}), {});
  throw std::invalid_argument("unknown builtin pattern '" + name + "'");
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "sigma", "sigma-321", "sigma-132", "upsilon", "p1", "p2", "q1", "q2", "inv"};
  return names;
}

namespace {

// Walks every occurrence and hands the 0-based position tuple to `sink`; a
// false return stops the scan.
template <typename Sink>
void scan_occurrences(const MeshPattern& P, const Permutation& host, Sink sink) {
  const int k = P.length();
  const int n = host.size();
  if (k > n) return;
  const auto& pv = host.values();
  const auto& tv = P.pattern().values();
  std::vector<char> shade(static_cast<std::size_t>(k + 1) * (k + 1), 0);
  for (const auto& [c, r] : P.shading()) shade[static_cast<std::size_t>(c) * (k + 1) + r] = 1;

  if (k == 0) {
    // One empty candidate; cell (0,0) covers the whole grid.
    if (!shade[0] || n == 0) sink(std::vector<int>{});
    return;
  }

  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> sorted_vals(k);
  for (;;) {
    bool iso = true;
    for (int a = 0; a < k && iso; ++a)
      for (int b = a + 1; b < k; ++b)
        if ((pv[idx[a]] < pv[idx[b]]) != (tv[a] < tv[b])) {
          iso = false;
          break;
        }
    if (iso) {
      for (int a = 0; a < k; ++a) sorted_vals[a] = pv[idx[a]];
      std::sort(sorted_vals.begin(), sorted_vals.end());
      bool ok = true;
      int a = 0;  // chosen positions strictly left of the cursor
      for (int pos = 0; pos < n && ok; ++pos) {
        if (a < k && idx[a] == pos) {
          ++a;
          continue;
        }
        const int val = pv[pos];
        const int b = static_cast<int>(
            std::lower_bound(sorted_vals.begin(), sorted_vals.end(), val) - sorted_vals.begin());
        if (shade[static_cast<std::size_t>(a) * (k + 1) + b]) ok = false;
      }
      if (ok && !sink(idx)) return;
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool is_sigma_occurrence(const std::vector<int>& v, int t1, int t2, int t3) {
  // sigma = 231 with column 1 and row 1 fully shaded: the middle entry follows
  // the first immediately, and the third entry is one less than the first.
  const int n = static_cast<int>(v.size());
  if (t1 < 1 || t3 > n || t2 != t1 + 1 || t3 <= t2) return false;
  return v[t2 - 1] > v[t1 - 1] && v[t3 - 1] == v[t1 - 1] - 1;
}

}  // namespace

std::vector<Occurrence> occurrences(const MeshPattern& pattern, const Permutation& host) {
  std::vector<Occurrence> out;
  scan_occurrences(pattern, host, [&](const std::vector<int>& idx) {
    Occurrence o;
    o.positions.reserve(idx.size());
    for (int t : idx) o.positions.push_back(t + 1);
    out.push_back(std::move(o));
    return true;
  });
  return out;
}

std::size_t occurrence_count(const MeshPattern& pattern, const Permutation& host) {
  std::size_t count = 0;
  scan_occurrences(pattern, host, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

std::map<int, Int> distribution(const MeshPattern& pattern, int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::map<int, Int> hist;
  for_each_permutation(n, [&](const Permutation& p) {
    hist[static_cast<int>(occurrence_count(pattern, p))] += 1;
  });
  return hist;
}

MarkedPermutation insert_sigma(const MarkedPermutation& mp) {
  if (!mp.marked_occurrences.empty())
    throw std::invalid_argument("input must carry inversion marks only");
  const std::vector<InversionPair> all = inversions(mp.perm);
  std::vector<InversionPair> marks = mp.marked_inversions;
  for (const auto& m : marks)
    if (std::find(all.begin(), all.end(), m) == all.end())
      throw std::invalid_argument("marked pair is not an inversion of the permutation");
  std::sort(marks.begin(), marks.end(), [&](const InversionPair& a, const InversionPair& b) {
    const int pa = mp.perm.position_of(a.first);
    const int pb = mp.perm.position_of(b.first);
    return pa != pb ? pa < pb : a.second < b.second;
  });
  for (std::size_t i = 1; i < marks.size(); ++i)
    if (marks[i] == marks[i - 1]) throw std::invalid_argument("duplicate marked inversion");

  std::vector<int> cur = mp.perm.values();
  std::vector<int> inserted;  // current values of the inserted entries
  for (std::size_t step = 0; step < marks.size(); ++step) {
    const int a = marks[step].first;
    const int b = marks[step].second;
    const int j = static_cast<int>(std::find(cur.begin(), cur.end(), a) - cur.begin()) + 1;
    for (int& v : cur)
      if (v > b) ++v;
    for (std::size_t later = step + 1; later < marks.size(); ++later) {
      if (marks[later].first > b) ++marks[later].first;
      if (marks[later].second > b) ++marks[later].second;
    }
    for (int& v : inserted)
      if (v > b) ++v;
    cur.insert(cur.begin() + (j - 1), b + 1);
    inserted.push_back(b + 1);
  }

  MarkedPermutation out;
  out.perm = Permutation(cur);
  for (int v : inserted) {
    const int i = out.perm.position_of(v);
    const int t3 = out.perm.position_of(v - 1);
    if (!is_sigma_occurrence(cur, i, i + 1, t3))
      throw std::logic_error("inserted entry does not open a sigma-occurrence");
    out.marked_occurrences.push_back({{i, i + 1, t3}});
  }
  std::sort(out.marked_occurrences.begin(), out.marked_occurrences.end());
  return out;
}

MarkedPermutation remove_sigma(const MarkedPermutation& mp) {
  if (!mp.marked_inversions.empty())
    throw std::invalid_argument("input must carry occurrence marks only");
  std::vector<int> cur = mp.perm.values();
  std::vector<int> firsts;  // first-entry positions of the marked occurrences
  for (const auto& o : mp.marked_occurrences) {
    if (o.positions.size() != 3 ||
        !is_sigma_occurrence(cur, o.positions[0], o.positions[1], o.positions[2]))
      throw std::invalid_argument("marked tuple is not a sigma-occurrence");
    firsts.push_back(o.positions[0]);
  }
  std::sort(firsts.begin(), firsts.end());
  for (std::size_t i = 1; i < firsts.size(); ++i)
    if (firsts[i] == firsts[i - 1]) throw std::invalid_argument("duplicate marked occurrence");

  std::vector<InversionPair> recorded;
  while (!firsts.empty()) {
    const int i = firsts.back();  // rightmost marked occurrence
    firsts.pop_back();
    const int a = cur[i - 1];
    const int t3 = static_cast<int>(std::find(cur.begin(), cur.end(), a - 1) - cur.begin()) + 1;
    if (!is_sigma_occurrence(cur, i, i + 1, t3))
      throw std::invalid_argument("marked occurrence destroyed before removal");
    cur.erase(cur.begin() + (i - 1));
    for (int& v : cur)
      if (v > a) --v;
    for (auto& r : recorded) {
      if (r.first > a) --r.first;
      if (r.second > a) --r.second;
    }
    recorded.push_back({cur[i - 1], a - 1});
  }

  MarkedPermutation out;
  out.perm = Permutation(cur);
  const std::vector<InversionPair> all = inversions(out.perm);
  for (const auto& r : recorded)
    if (std::find(all.begin(), all.end(), r) == all.end())
      throw std::invalid_argument("marking is not in the image of insert_sigma");
  std::sort(recorded.begin(), recorded.end(), [&](const InversionPair& a, const InversionPair& b) {
    const int pa = out.perm.position_of(a.first);
    const int pb = out.perm.position_of(b.first);
    return pa != pb ? pa < pb : a.second < b.second;
  });
  out.marked_inversions = std::move(recorded);
  return out;
}

Permutation involution(const Permutation& p) {
  // Anatomy of the two length-4 patterns: both live on a frame (x, x-1) with x
  // left of x-1 and some entry below x-1 after it. A p1-occurrence parks an
  // entry larger than x immediately after x; a q1-occurrence parks one
  // immediately before x-1. The involution exchanges the two parking sides of
  // every frame that holds exactly one of them, moving the whole run of
  // entries above x adjacent to the occupied side. Frames holding both sides
  // stay put (for 3421 the shared entry is parked on both sides at once).
  // Tighter frames act first so that stacked runs unwind one layer at a time.
  const int n = p.size();
  std::vector<int> seq = p.values();

  struct Plan {
    int x;
    bool from_left;
  };
  std::vector<Plan> plans;
  {
    std::vector<int> pos(n + 2, 0);
    for (int i = 1; i <= n; ++i) pos[seq[i - 1]] = i;
    for (int x = 2; x <= n; ++x) {
      const int px = pos[x];
      const int pc = pos[x - 1];
      if (px >= pc) continue;
      bool witness = false;
      for (int j = pc + 1; j <= n && !witness; ++j)
        if (seq[j - 1] < x - 1) witness = true;
      if (!witness) continue;
      const bool left = px + 1 != pc && seq[px] > x;
      const bool right = pc - 1 != px && seq[pc - 2] > x;
      if (left != right) plans.push_back({x, left});
    }
  }
  std::sort(plans.begin(), plans.end(), [](const Plan& a, const Plan& b) { return a.x > b.x; });

  for (const Plan& plan : plans) {
    const auto at = [&](int value) {
      return static_cast<int>(std::find(seq.begin(), seq.end(), value) - seq.begin()) + 1;
    };
    const int px = at(plan.x);
    const int pc = at(plan.x - 1);
    std::vector<int> block;
    if (plan.from_left) {
      for (int j = px + 1; j < pc && seq[j - 1] > plan.x; ++j) block.push_back(seq[j - 1]);
    } else {
      for (int j = pc - 1; j > px && seq[j - 1] > plan.x; --j) block.push_back(seq[j - 1]);
      std::reverse(block.begin(), block.end());
    }
    if (block.empty()) continue;
    std::vector<int> next;
    next.reserve(seq.size());
    const std::set<int> moving(block.begin(), block.end());
    for (int value : seq) {
      if (moving.count(value)) continue;
      if (!plan.from_left && value == plan.x) {
        next.push_back(value);
        next.insert(next.end(), block.begin(), block.end());
      } else if (plan.from_left && value == plan.x - 1) {
        next.insert(next.end(), block.begin(), block.end());
        next.push_back(value);
      } else {
        next.push_back(value);
      }
    }
    seq = std::move(next);
  }
  return Permutation(seq);
}

}  // namespace fishburn::meshpat
