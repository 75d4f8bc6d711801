#include "fishburn/posets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fishburn/detail/parse.hpp"

namespace fishburn::posets {

FactorialPoset::FactorialPoset(std::vector<int> bounds) : bounds_(std::move(bounds)) {
  for (int k = 0; k < static_cast<int>(bounds_.size()); ++k)
    if (bounds_[k] < 0 || bounds_[k] > k)
      throw std::invalid_argument("bound b_" + std::to_string(k + 1) + " outside [0," +
                                  std::to_string(k) + "]");
}

FactorialPoset FactorialPoset::from_inversion_table(const InversionTable& t) {
  return FactorialPoset(t.entries());
}

FactorialPoset FactorialPoset::parse(const std::string& text) {
  const InversionTable t = InversionTable::parse(text);
  return FactorialPoset(t.entries());
}

int FactorialPoset::bound(int k) const {
  if (k < 1 || k > size()) throw std::out_of_range("element out of range");
  return bounds_[k - 1];
}

bool FactorialPoset::leq(int i, int j) const {
  if (i < 1 || i > size() || j < 1 || j > size()) throw std::out_of_range("element out of range");
  return i <= bounds_[j - 1];
}

int FactorialPoset::pre_count(int i) const { return bound(i); }

int FactorialPoset::suc_count(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("element out of range");
  int count = 0;
  for (int b : bounds_)
    if (b >= i) ++count;
  return count;
}

InversionTable FactorialPoset::to_inversion_table() const { return InversionTable(bounds_); }

std::string FactorialPoset::str() const { return to_inversion_table().str(); }

GenericPoset::GenericPoset(int n, std::vector<std::vector<bool>> less)
    : n_(n), less_(std::move(less)) {
  if (n_ < 0 || static_cast<int>(less_.size()) != n_)
    throw std::invalid_argument("relation matrix size mismatch");
  for (const auto& row : less_)
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("relation matrix size mismatch");
  for (int i = 0; i < n_; ++i) {
    if (less_[i][i]) throw std::invalid_argument("relation is not irreflexive");
    for (int j = 0; j < n_; ++j) {
      if (!less_[i][j]) continue;
      if (less_[j][i]) throw std::invalid_argument("relation is not antisymmetric");
      for (int k = 0; k < n_; ++k)
        if (less_[j][k] && !less_[i][k])
          throw std::invalid_argument("relation is not transitive");
    }
  }
}

GenericPoset GenericPoset::parse(const std::string& text) {
  std::size_t pos = 0;
  const int n = detail::parse_uint(text, pos);
  detail::expect(text, pos, '|');
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  if (pos < text.size()) {
    for (;;) {
      const std::size_t at = pos;
      const int i = detail::parse_uint(text, pos);
      detail::expect(text, pos, '<');
      const int j = detail::parse_uint(text, pos);
      if (i < 1 || i > n || j < 1 || j > n) throw ParseError(at, "element out of range");
      less[i - 1][j - 1] = true;
      if (pos == text.size()) break;
      detail::expect(text, pos, ',');
    }
  }
  // listed relations are closed transitively before validation
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (less[i][k] && less[k][j]) less[i][j] = true;
  try {
    return GenericPoset(n, std::move(less));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

bool GenericPoset::less(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("element out of range");
  return less_[i - 1][j - 1];
}

std::string GenericPoset::str() const {
  std::ostringstream os;
  os << n_ << '|';
  bool first = true;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (less(i, j)) {
        if (!first) os << ',';
        os << i << '<' << j;
        first = false;
      }
  return os.str();
}

GenericPoset to_generic(const FactorialPoset& p) {
  const int n = p.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (p.leq(i, j)) less[i - 1][j - 1] = true;
  return GenericPoset(n, std::move(less));
}

bool is_interval_order(const GenericPoset& q) {
  const int n = q.size();
  std::vector<std::vector<bool>> pre(n);
  for (int i = 1; i <= n; ++i) {
    pre[i - 1].resize(n);
    for (int j = 1; j <= n; ++j) pre[i - 1][j - 1] = q.less(j, i);
  }
  const auto subset = [&](int a, int b) {
    for (int j = 0; j < n; ++j)
      if (pre[a][j] && !pre[b][j]) return false;
    return true;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!subset(a, b) && !subset(b, a)) return false;
  return true;
}

bool is_two_plus_two_free(const GenericPoset& q) {
  const int n = q.size();
  std::vector<std::pair<int, int>> related;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (q.less(a, b)) related.push_back({a, b});
  const auto incomparable = [&](int x, int y) { return x != y && !q.less(x, y) && !q.less(y, x); };
  for (const auto& [a, b] : related)
    for (const auto& [c, d] : related) {
      if (a == c || a == d || b == c || b == d) continue;
      if (incomparable(a, c) && incomparable(a, d) && incomparable(b, c) && incomparable(b, d))
        return false;
    }
  return true;
}

namespace {

bool pair_before(const IncomparablePair& a, const IncomparablePair& b) {
  if (a.j != b.j) return a.j < b.j;
  return a.i > b.i;
}

}  // namespace

std::vector<IncomparablePair> incomparable_pairs(const FactorialPoset& p) {
  std::vector<IncomparablePair> out;
  for (int j = 1; j <= p.size(); ++j)
    for (int i = j - 1; i > p.bound(j); --i) out.push_back({i, j});
  std::sort(out.begin(), out.end(), pair_before);
  return out;
}

std::vector<int> mislabelings(const FactorialPoset& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i)
    if (p.pre_count(i) > p.pre_count(i + 1) && p.suc_count(i) <= p.suc_count(i + 1))
      out.push_back(i);
  return out;
}

bool is_canonical(const FactorialPoset& p) { return mislabelings(p).empty(); }

bool isomorphic(const FactorialPoset& a, const FactorialPoset& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 1);
  do {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n; ++j)
        if (a.leq(i, j) != b.leq(map[i - 1], map[j - 1])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(map.begin(), map.end()));
  return false;
}

MarkedPoset insert_mislabelings(const MarkedPoset& mp) {
  if (!mp.marked_mislabelings.empty())
    throw std::invalid_argument("input must carry incomparable-pair marks only");
  const std::vector<IncomparablePair> all = incomparable_pairs(mp.poset);
  std::vector<IncomparablePair> marks = mp.marked_pairs;
  for (const auto& m : marks)
    if (std::find(all.begin(), all.end(), m) == all.end())
      throw std::invalid_argument("mark is not an incomparable pair of the poset");
  std::sort(marks.begin(), marks.end(), pair_before);
  for (std::size_t i = 1; i < marks.size(); ++i)
    if (marks[i] == marks[i - 1]) throw std::invalid_argument("duplicate mark");

  std::vector<int> b = mp.poset.bounds();
  std::vector<int> inserted;
  for (std::size_t step = 0; step < marks.size(); ++step) {
    const int i = marks[step].i;
    const int j = marks[step].j;
    // New element takes label j with Pre = [1,i]; old bounds >= j shift up,
    // which hands the new element exactly the successor set of the old j.
    std::vector<int> next(b.begin(), b.begin() + (j - 1));
    next.push_back(i);
    for (int k = j - 1; k < static_cast<int>(b.size()); ++k)
      next.push_back(b[k] + (b[k] >= j ? 1 : 0));
    b = std::move(next);
    for (std::size_t later = step + 1; later < marks.size(); ++later) {
      if (marks[later].i >= j) ++marks[later].i;
      if (marks[later].j >= j) ++marks[later].j;
    }
    for (int& label : inserted)
      if (label >= j) ++label;
    inserted.push_back(j);
  }

  MarkedPoset out;
  out.poset = FactorialPoset(b);
  const std::vector<int> mis = mislabelings(out.poset);
  for (int label : inserted)
    if (std::find(mis.begin(), mis.end(), label) == mis.end())
      throw std::logic_error("inserted element is not a mislabeling");
  std::sort(inserted.begin(), inserted.end());
  out.marked_mislabelings = std::move(inserted);
  return out;
}

MarkedPoset remove_mislabelings(const MarkedPoset& mp) {
  if (!mp.marked_pairs.empty())
    throw std::invalid_argument("input must carry mislabeling marks only");
  {
    const std::vector<int> mis = mislabelings(mp.poset);
    for (int label : mp.marked_mislabelings)
      if (std::find(mis.begin(), mis.end(), label) == mis.end())
        throw std::invalid_argument("marked label is not a mislabeling");
  }
  std::set<int> marked(mp.marked_mislabelings.begin(), mp.marked_mislabelings.end());
  if (marked.size() != mp.marked_mislabelings.size())
    throw std::invalid_argument("duplicate mark");

  std::vector<int> b = mp.poset.bounds();
  std::vector<IncomparablePair> recorded;
  while (!marked.empty()) {
    const int j = *marked.rbegin();
    marked.erase(j);
    {
      const std::vector<int> mis = mislabelings(FactorialPoset(b));
      if (std::find(mis.begin(), mis.end(), j) == mis.end())
        throw std::invalid_argument("marking is not in the image of insert_mislabelings");
    }
    // The largest l with l <_P j and l not below j+1 is b_j itself; the pair
    // (l, j+1) is stored as (l, j) in post-removal labels.
    const int l = b[j - 1];
    b.erase(b.begin() + (j - 1));
    for (int k = j - 1; k < static_cast<int>(b.size()); ++k)
      if (b[k] >= j) --b[k];
    for (IncomparablePair& r : recorded) {
      if (r.i > j) --r.i;
      if (r.j > j) --r.j;
    }
    recorded.push_back({l, j});
  }

  MarkedPoset out;
  out.poset = FactorialPoset(b);
  const std::vector<IncomparablePair> all = incomparable_pairs(out.poset);
  for (const auto& r : recorded)
    if (std::find(all.begin(), all.end(), r) == all.end())
      throw std::invalid_argument("marking is not in the image of insert_mislabelings");
  std::sort(recorded.begin(), recorded.end(), pair_before);
  out.marked_pairs = std::move(recorded);
  return out;
}

}  // namespace fishburn::posets
