#include "trmap/orientation.hpp"

#include <deque>

#include "trmap/error.hpp"

namespace trmap {

OrientedMap delta(const TreeRootedMap& mt) {
  const RootedMap& m = mt.map;
  OrientedMap om{m, std::vector<bool>(m.half_edge_count(), false)};
  om.is_head[m.root] = true;
  std::vector<bool> met(m.half_edge_count(), false);
  for (const TourStep& s : tour(mt)) {
    int h = s.half_edge;
    int o = m.pair[h];
    if (!met[o]) {
      // First time along this edge. Following a tree edge leaves its origin,
      // so the head is the other side; crossing a non-tree edge meets its head.
      if (s.event == TourEvent::FollowTree) {
        om.is_head[o] = true;
      } else {
        om.is_head[h] = true;
      }
    }
    met[h] = true;
  }
  return om;
}

TreeRootedMap gamma(const OrientedMap& om) {
  const RootedMap& m = om.map;
  const std::size_t hcount = m.half_edge_count();
  auto vid = vertex_ids(m);
  TreeRootedMap mt{m, std::vector<bool>(hcount, false)};
  std::vector<bool> met(hcount, false);
  std::vector<bool> vertex_in_tree(vertex_count(m), false);
  vertex_in_tree[vid[m.root]] = true;

  std::size_t steps = 0;
  int h = m.next[m.root];
  while (h != m.root) {
    if (++steps > 2 * hcount) {
      throw Error(ErrorKind::NonTreeOrientation, "tour exceeded its step budget");
    }
    met[h] = true;
    int o = m.pair[h];
    if (!om.is_head[h] && !mt.in_tree[h] && !met[o]) {
      if (vertex_in_tree[vid[o]]) {
        throw Error(ErrorKind::NonTreeOrientation,
                    "adding edge at half-edge " + std::to_string(h) +
                        " would close a cycle");
      }
      mt.in_tree[h] = mt.in_tree[o] = true;
      vertex_in_tree[vid[o]] = true;
    }
    h = mt.in_tree[h] ? m.next[o] : m.next[h];
  }
  if (!is_spanning_tree(m, mt.in_tree)) {
    throw Error(ErrorKind::NonTreeOrientation, "recovered tree is not spanning");
  }
  return mt;
}

std::vector<DirectedCycle> directed_cycles(const OrientedMap& om) {
  const RootedMap& m = om.map;
  auto vid = vertex_ids(m);
  const int v = static_cast<int>(vertex_count(m));
  std::vector<std::vector<int>> out_tails(v);
  for (std::size_t h = 0; h < m.half_edge_count(); ++h) {
    if (static_cast<int>(h) == m.root || om.is_head[h]) continue;
    out_tails[vid[h]].push_back(static_cast<int>(h));
  }
  std::vector<DirectedCycle> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(v, false);
  // Each cycle is found once, from its smallest vertex.
  auto dfs = [&](auto&& self, int start, int at) -> void {
    for (int t : out_tails[at]) {
      int to = vid[m.pair[t]];
      if (to == start) {
        path.push_back(t);
        cycles.push_back({path});
        path.pop_back();
      } else if (to > start && !on_path[to]) {
        on_path[to] = true;
        path.push_back(t);
        self(self, start, to);
        path.pop_back();
        on_path[to] = false;
      }
    }
  };
  for (int s = 0; s < v; ++s) {
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  return cycles;
}

bool is_positive(const OrientedMap& om, const DirectedCycle& c) {
  const RootedMap& m = om.map;
  const std::size_t hcount = m.half_edge_count();
  auto vid = vertex_ids(m);
  std::vector<int> prev(hcount);
  for (std::size_t h = 0; h < hcount; ++h) prev[m.next[h]] = static_cast<int>(h);

  std::vector<bool> on_cycle(hcount, false);
  std::vector<bool> cycle_vertex(vertex_count(m), false);
  for (int t : c.tails) {
    on_cycle[t] = on_cycle[m.pair[t]] = true;
    cycle_vertex[vid[t]] = true;
  }

  enum : char { kUnknown, kRight, kLeft };
  std::vector<char> side(hcount, kUnknown);
  std::deque<int> queue;
  const std::size_t k = c.tails.size();
  for (std::size_t i = 0; i < k; ++i) {
    int t = c.tails[i];
    int in = m.pair[c.tails[(i + k - 1) % k]];  // head arriving at vid[t]
    for (int x = m.next[in]; x != t; x = m.next[x]) {
      side[x] = kRight;
      queue.push_back(x);
    }
    for (int x = m.next[t]; x != in; x = m.next[x]) {
      side[x] = kLeft;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    auto spread = [&](int y) {
      if (on_cycle[y]) return;
      if (side[y] == kUnknown) {
        side[y] = side[x];
        queue.push_back(y);
      } else if (side[y] != side[x]) {
        throw Error(ErrorKind::InvalidMap, "cycle sides are not separated");
      }
    };
    spread(m.pair[x]);
    if (!cycle_vertex[vid[x]]) {
      spread(m.next[x]);
      spread(prev[x]);
    }
  }
  return side[m.root] == kRight;
}

std::vector<DirectedCycle> positive_cycles(const OrientedMap& om) {
  std::vector<DirectedCycle> out;
  for (auto& c : directed_cycles(om)) {
    if (is_positive(om, c)) out.push_back(std::move(c));
  }
  return out;
}

bool is_root_connected(const OrientedMap& om) {
  const RootedMap& m = om.map;
  auto vid = vertex_ids(m);
  const std::size_t v = vertex_count(m);
  std::vector<std::vector<int>> members(v);
  for (std::size_t h = 0; h < m.half_edge_count(); ++h) {
    members[vid[h]].push_back(static_cast<int>(h));
  }
  std::vector<bool> seen(v, false);
  std::deque<int> queue{vid[m.root]};
  seen[vid[m.root]] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int h : members[x]) {
      if (h == m.root || om.is_head[h]) continue;
      int to = vid[m.pair[h]];
      if (!seen[to]) {
        seen[to] = true;
        ++reached;
        queue.push_back(to);
      }
    }
  }
  return reached == v;
}

bool is_tree_orientation(const OrientedMap& om) {
  if (!is_root_connected(om)) return false;
  for (const auto& c : directed_cycles(om)) {
    if (is_positive(om, c)) return false;
  }
  return true;
}

bool is_delta_image(const OrientedMap& om) {
  for (auto& tree : spanning_trees(om.map)) {
    if (delta(TreeRootedMap{om.map, std::move(tree)}).is_head == om.is_head) {
      return true;
    }
  }
  return false;
}

std::vector<OrientedMap> all_orientations(const RootedMap& m) {
  auto reps = edge_representatives(m);
  std::vector<OrientedMap> out;
  const std::size_t e = reps.size();
  for (unsigned long mask = 0; mask < (1ul << e); ++mask) {
    OrientedMap om{m, std::vector<bool>(m.half_edge_count(), false)};
    om.is_head[m.root] = true;
    for (std::size_t i = 0; i < e; ++i) {
      int h = reps[i];
      om.is_head[(mask >> i) & 1 ? m.pair[h] : h] = true;
    }
    out.push_back(std::move(om));
  }
  return out;
}

}  // namespace trmap
