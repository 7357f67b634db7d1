#include "trmap/walsh_lehman.hpp"

#include <set>

#include "trmap/error.hpp"
#include "trmap/words.hpp"

namespace trmap {

std::string xi(const TreeRootedMap& mt) {
  std::vector<bool> seen_edge(mt.map.half_edge_count(), false);
  std::string w;
  for (const TourStep& s : tour(mt)) {
    int rep = std::min(s.half_edge, mt.map.pair[s.half_edge]);
    bool first = !seen_edge[rep];
    seen_edge[rep] = true;
    if (s.event == TourEvent::FollowTree) {
      w.push_back(first ? kOpenA : kCloseA);
    } else {
      w.push_back(first ? kOpenB : kCloseB);
    }
  }
  return w;
}

TreeRootedMap xi_inv(std::string_view w) {
  require_paren_shuffle(w);
  TreeRootedMap mt;
  RootedMap& m = mt.map;
  m.next = {0};
  m.pair = {0};
  m.root = 0;
  mt.in_tree = {false};

  // `corner` is the half-edge after which the next one is inserted: the
  // synthetic tour is always standing in the corner following it.
  int corner = 0;
  std::vector<int> tree_stack;  // parent-side half-edges of open tree edges
  std::vector<int> b_stack;     // unmatched b half-edges
  auto add_half_edge = [&](bool tree) {
    int h = static_cast<int>(m.next.size());
    m.next.push_back(h);
    m.pair.push_back(h);
    mt.in_tree.push_back(tree);
    return h;
  };
  auto insert_after = [&](int at, int h) {
    m.next[h] = m.next[at];
    m.next[at] = h;
  };

  for (char c : w) {
    switch (c) {
      case kOpenA: {
        int p = add_half_edge(true);
        int q = add_half_edge(true);
        insert_after(corner, p);
        m.pair[p] = q;
        m.pair[q] = p;
        tree_stack.push_back(p);
        corner = q;
        break;
      }
      case kCloseA:
        corner = tree_stack.back();
        tree_stack.pop_back();
        break;
      case kOpenB: {
        int h = add_half_edge(false);
        insert_after(corner, h);
        b_stack.push_back(h);
        corner = h;
        break;
      }
      default: {
        int t = add_half_edge(false);
        insert_after(corner, t);
        int h = b_stack.back();
        b_stack.pop_back();
        m.pair[t] = h;
        m.pair[h] = t;
        corner = t;
        break;
      }
    }
  }
  return mt;
}

std::vector<RootedMap> enumerate_maps(std::size_t n) {
  std::set<std::vector<int>> seen;
  std::vector<RootedMap> out;
  for_each_paren_shuffle(n, [&](const std::string& w) {
    RootedMap m = xi_inv(w).map;
    if (seen.insert(canonical_form(m)).second) {
      out.push_back(relabel(m, canonical_labels(m)));
    }
  });
  return out;
}

}  // namespace trmap
