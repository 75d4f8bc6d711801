#include "fishburn/matchings.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fishburn/detail/parse.hpp"

namespace fishburn::matchings {

Matching::Matching(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  const int m = static_cast<int>(arcs_.size());
  std::vector<char> seen(2 * m + 1, 0);
  for (const Arc& a : arcs_) {
    if (a.opener >= a.closer) throw std::invalid_argument("arc must open before it closes");
    for (int point : {a.opener, a.closer}) {
      if (point < 1 || point > 2 * m || seen[point])
        throw std::invalid_argument("arcs do not form a perfect matching of [2m]");
      seen[point] = 1;
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
}

Matching Matching::parse(const std::string& text) {
  std::vector<Arc> arcs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    detail::expect(text, pos, '(');
    const int opener = detail::parse_uint(text, pos);
    detail::expect(text, pos, ',');
    const int closer = detail::parse_uint(text, pos);
    detail::expect(text, pos, ')');
    arcs.push_back({opener, closer});
  }
  try {
    return Matching(std::move(arcs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string Matching::str() const {
  std::ostringstream os;
  for (const Arc& a : arcs_) os << '(' << a.opener << ',' << a.closer << ')';
  return os.str();
}

Matching from_inversion_table(const InversionTable& t) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= t.size(); ++i) {
    // Slot 0 sits just left of the first closer (position i); slot b >= 1 sits
    // just left of the opener at position i-b.
    const int opener_pos = i - t.at(i);
    for (Arc& a : arcs) {
      if (a.opener >= opener_pos) ++a.opener;
      if (a.closer >= opener_pos) ++a.closer;
    }
    arcs.push_back({opener_pos, 2 * i});
  }
  return Matching(std::move(arcs));
}

bool is_zero_alignment(const Matching& m) {
  if (m.semilength() == 0) return true;
  int max_opener = 0, min_closer = 2 * m.semilength() + 1;
  for (const Arc& a : m.arcs()) {
    max_opener = std::max(max_opener, a.opener);
    min_closer = std::min(min_closer, a.closer);
  }
  return max_opener < min_closer;
}

std::map<Arc, ArcFlags> classify(const Matching& m) {
  std::map<Arc, ArcFlags> flags;
  for (const Arc& a : m.arcs()) flags[a];
  for (const Arc& outer : m.arcs()) {
    for (const Arc& inner : m.arcs()) {
      if (outer == inner) continue;
      if (outer.opener < inner.opener && inner.closer < outer.closer) {
        flags[outer].nesting = true;
        flags[inner].nested = true;
        if (inner.opener == outer.opener + 1) {
          flags[outer].left_nesting = true;
          flags[inner].left_nested = true;
        }
        if (outer.closer == inner.closer + 1) {
          flags[outer].right_nesting = true;
          flags[inner].right_nested = true;
        }
      }
      if (outer.opener < inner.opener && inner.opener < outer.closer &&
          outer.closer < inner.closer) {
        flags[outer].crossing = true;
        flags[inner].crossed = true;
        if (inner.opener == outer.opener + 1) {
          flags[outer].left_crossing = true;
          flags[inner].left_crossed = true;
        }
        if (inner.closer == outer.closer + 1) {
          flags[outer].right_crossing = true;
          flags[inner].right_crossed = true;
        }
      }
    }
  }
  return flags;
}

std::string classification_csv(const Matching& m) {
  std::ostringstream os;
  os << "opener,closer,nesting,nested,left_nesting,left_nested,right_nesting,right_nested,"
        "crossing,crossed,left_crossing,left_crossed,right_crossing,right_crossed\n";
  const auto flags = classify(m);
  for (const Arc& a : m.arcs()) {
    const ArcFlags& f = flags.at(a);
    os << a.opener << ',' << a.closer;
    for (bool bit : {f.nesting, f.nested, f.left_nesting, f.left_nested, f.right_nesting,
                     f.right_nested, f.crossing, f.crossed, f.left_crossing, f.left_crossed,
                     f.right_crossing, f.right_crossed})
      os << ',' << (bit ? 1 : 0);
    os << '\n';
  }
  return os.str();
}

std::vector<Arc> confused_arcs(const Matching& m) {
  std::vector<Arc> out;
  for (const auto& [arc, f] : classify(m))
    if (f.left_nesting && f.right_crossed) out.push_back(arc);
  return out;
}

int nesting_pair_count(const Matching& m) {
  int count = 0;
  for (const Arc& outer : m.arcs())
    for (const Arc& inner : m.arcs())
      if (outer.opener < inner.opener && inner.closer < outer.closer) ++count;
  return count;
}

namespace {

bool embraced_before(const EmbracedOpener& a, const EmbracedOpener& b) {
  if (a.opener != b.opener) return a.opener > b.opener;
  return a.nesting_arc.closer > b.nesting_arc.closer;
}

}  // namespace

std::vector<EmbracedOpener> embraced_nested_openers(const Matching& m) {
  std::vector<EmbracedOpener> out;
  for (const Arc& outer : m.arcs())
    for (const Arc& inner : m.arcs())
      if (outer.opener < inner.opener && inner.closer < outer.closer)
        out.push_back({outer, inner.opener});
  std::sort(out.begin(), out.end(), embraced_before);
  return out;
}

MarkedMatching insert_confused(const MarkedMatching& mm) {
  if (!mm.marked_confused.empty())
    throw std::invalid_argument("input must carry embraced-opener marks only");
  if (!is_zero_alignment(mm.matching))
    throw std::invalid_argument("host is not a zero-alignment matching");
  const std::vector<EmbracedOpener> all = embraced_nested_openers(mm.matching);
  std::vector<EmbracedOpener> marks = mm.marked_openers;
  for (const auto& mk : marks)
    if (std::find(all.begin(), all.end(), mk) == all.end())
      throw std::invalid_argument("mark is not an embraced nested opener of the host");
  std::sort(marks.begin(), marks.end(), embraced_before);
  for (std::size_t i = 1; i < marks.size(); ++i)
    if (marks[i] == marks[i - 1]) throw std::invalid_argument("duplicate mark");

  std::vector<Arc> arcs = mm.matching.arcs();
  std::vector<Arc> inserted;
  for (std::size_t step = 0; step < marks.size(); ++step) {
    const int k = marks[step].opener;
    const int j = marks[step].nesting_arc.closer;
    // One point lands immediately left of k, one immediately right of j.
    const auto relabel = [k, j](int x) { return x + (x >= k ? 1 : 0) + (x > j ? 1 : 0); };
    for (Arc& a : arcs) a = {relabel(a.opener), relabel(a.closer)};
    for (Arc& a : inserted) a = {relabel(a.opener), relabel(a.closer)};
    for (std::size_t later = step + 1; later < marks.size(); ++later) {
      EmbracedOpener& mk = marks[later];
      mk = {{relabel(mk.nesting_arc.opener), relabel(mk.nesting_arc.closer)}, relabel(mk.opener)};
    }
    arcs.push_back({k, j + 2});
    inserted.push_back({k, j + 2});
  }

  MarkedMatching out;
  out.matching = Matching(arcs);
  if (!is_zero_alignment(out.matching))
    throw std::logic_error("insertion produced an alignment");
  const std::vector<Arc> confused = confused_arcs(out.matching);
  for (const Arc& a : inserted)
    if (std::find(confused.begin(), confused.end(), a) == confused.end())
      throw std::logic_error("inserted arc is not confused");
  std::sort(inserted.begin(), inserted.end());
  out.marked_confused = std::move(inserted);
  return out;
}

MarkedMatching remove_confused(const MarkedMatching& mm) {
  if (!mm.marked_openers.empty())
    throw std::invalid_argument("input must carry confused-arc marks only");
  if (!is_zero_alignment(mm.matching))
    throw std::invalid_argument("host is not a zero-alignment matching");
  {
    const std::vector<Arc> confused = confused_arcs(mm.matching);
    for (const Arc& a : mm.marked_confused)
      if (std::find(confused.begin(), confused.end(), a) == confused.end())
        throw std::invalid_argument("marked arc is not confused");
  }

  std::vector<Arc> arcs = mm.matching.arcs();
  std::set<Arc> marked(mm.marked_confused.begin(), mm.marked_confused.end());
  if (marked.size() != mm.marked_confused.size())
    throw std::invalid_argument("duplicate mark");
  std::vector<EmbracedOpener> recorded;

  const auto arc_with_opener = [&](int opener) -> const Arc* {
    for (const Arc& a : arcs)
      if (a.opener == opener) return &a;
    return nullptr;
  };
  const auto arc_with_closer = [&](int closer) -> const Arc* {
    for (const Arc& a : arcs)
      if (a.closer == closer) return &a;
    return nullptr;
  };

  while (!marked.empty()) {
    // Undo the most recent insertion: among marked arcs whose left-nested
    // partner (opener a+1) is unmarked, the one with the smallest opener.
    const Arc* pick = nullptr;
    for (const Arc& a : marked) {
      const Arc* partner = arc_with_opener(a.opener + 1);
      if (partner && partner->closer < a.closer && !marked.count(*partner)) {
        pick = &a;
        break;  // std::set iterates by ascending opener
      }
    }
    if (!pick) throw std::invalid_argument("marking is not in the image of insert_confused");
    const Arc removed = *pick;
    const Arc* nesting = arc_with_closer(removed.closer - 1);
    if (!nesting || nesting->opener >= removed.opener)
      throw std::invalid_argument("marking is not in the image of insert_confused");
    const EmbracedOpener pre{{nesting->opener, nesting->closer}, removed.opener + 1};

    const auto relabel = [&removed](int x) {
      return x - (x > removed.opener ? 1 : 0) - (x > removed.closer ? 1 : 0);
    };
    std::vector<Arc> next;
    for (const Arc& a : arcs)
      if (a != removed) next.push_back({relabel(a.opener), relabel(a.closer)});
    arcs = std::move(next);
    std::set<Arc> next_marked;
    for (const Arc& a : marked)
      if (a != removed) next_marked.insert({relabel(a.opener), relabel(a.closer)});
    marked = std::move(next_marked);
    for (EmbracedOpener& r : recorded)
      r = {{relabel(r.nesting_arc.opener), relabel(r.nesting_arc.closer)}, relabel(r.opener)};
    recorded.push_back(
        {{relabel(pre.nesting_arc.opener), relabel(pre.nesting_arc.closer)}, relabel(pre.opener)});
  }

  MarkedMatching out;
  out.matching = Matching(arcs);
  std::sort(recorded.begin(), recorded.end(), embraced_before);
  out.marked_openers = std::move(recorded);

  // The paper gives no explicit removal order, so the reconstruction is
  // checked by replaying the insertion.
  const MarkedMatching again = insert_confused(out);
  std::vector<Arc> want = mm.marked_confused;
  std::sort(want.begin(), want.end());
  if (again.matching != mm.matching || again.marked_confused != want)
    throw std::invalid_argument("marking is not in the image of insert_confused");
  return out;
}

Matching zero_alignment_at(int n, std::uint64_t index) {
  return from_inversion_table(inversion_table_at(n, index));
}

void for_each_zero_alignment(int n, const std::function<void(const Matching&)>& fn) {
  for_each_inversion_table(n, [&](const InversionTable& t) { fn(from_inversion_table(t)); });
}

}  // namespace fishburn::matchings
