#include "trmap/planar_map.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "trmap/error.hpp"

namespace trmap {

RootedMap RootedMap::vertex() { return RootedMap{{0}, {0}, 0}; }

namespace {

std::size_t count_cycles(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t h = 0; h < perm.size(); ++h) {
    if (seen[h]) continue;
    ++cycles;
    for (int x = static_cast<int>(h); !seen[x]; x = perm[x]) seen[x] = true;
  }
  return cycles;
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<bool> hit(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

Validation validate(const RootedMap& m) {
  Validation v;
  const std::size_t h = m.half_edge_count();
  auto fail = [&](Violation kind, std::string msg) {
    v.ok = false;
    v.violation = kind;
    v.message = std::move(msg);
    return v;
  };
  if (h == 0 || h % 2 == 0 || m.pair.size() != h) {
    return fail(Violation::BadPairing, "half-edge count must be odd and consistent");
  }
  if (!is_permutation(m.next)) {
    return fail(Violation::BadPermutation, "next is not a permutation");
  }
  if (!is_permutation(m.pair)) {
    return fail(Violation::BadPairing, "pair is not a permutation");
  }
  if (m.root < 0 || static_cast<std::size_t>(m.root) >= h || m.pair[m.root] != m.root) {
    return fail(Violation::BadRoot, "root must be the fixed point of pair");
  }
  for (std::size_t x = 0; x < h; ++x) {
    if (m.pair[m.pair[x]] != static_cast<int>(x)) {
      return fail(Violation::BadPairing, "pair is not an involution");
    }
    if (static_cast<int>(x) != m.root && m.pair[x] == static_cast<int>(x)) {
      return fail(Violation::BadPairing, "pair has a second fixed point");
    }
  }
  std::vector<bool> seen(h, false);
  std::deque<int> queue{m.root};
  seen[m.root] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : {m.next[x], m.pair[x]}) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  if (reached != h) return fail(Violation::Disconnected, "map is not connected");

  v.stats.vertices = vertex_count(m);
  v.stats.edges = m.edge_count();
  v.stats.faces = face_count(m);
  long euler = static_cast<long>(v.stats.vertices) - static_cast<long>(v.stats.edges) +
               static_cast<long>(v.stats.faces);
  if (euler != 2) {
    return fail(Violation::GenusViolation,
                "Euler characteristic " + std::to_string(euler) + " != 2");
  }
  v.ok = true;
  return v;
}

void require_valid(const RootedMap& m) {
  auto v = validate(m);
  if (!v.ok) throw Error(ErrorKind::InvalidMap, v.message);
}

std::vector<int> vertex_ids(const RootedMap& m) {
  std::vector<int> id(m.half_edge_count(), -1);
  int next_id = 0;
  for (std::size_t h = 0; h < id.size(); ++h) {
    if (id[h] >= 0) continue;
    for (int x = static_cast<int>(h); id[x] < 0; x = m.next[x]) id[x] = next_id;
    ++next_id;
  }
  return id;
}

std::size_t vertex_count(const RootedMap& m) { return count_cycles(m.next); }

std::size_t face_count(const RootedMap& m) {
  std::vector<int> phi(m.half_edge_count());
  for (std::size_t h = 0; h < phi.size(); ++h) phi[h] = m.next[m.pair[h]];
  return count_cycles(phi);
}

RootedMap relabel(const RootedMap& m, const std::vector<int>& perm) {
  RootedMap out;
  out.next.resize(m.half_edge_count());
  out.pair.resize(m.half_edge_count());
  for (std::size_t h = 0; h < perm.size(); ++h) {
    out.next[perm[h]] = perm[m.next[h]];
    out.pair[perm[h]] = perm[m.pair[h]];
  }
  out.root = perm[m.root];
  return out;
}

std::vector<int> canonical_labels(const RootedMap& m) {
  std::vector<int> label(m.half_edge_count(), -1);
  int next_label = 0;
  std::deque<int> queue{m.root};
  label[m.root] = next_label++;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : {m.next[x], m.pair[x]}) {
      if (label[y] < 0) {
        label[y] = next_label++;
        queue.push_back(y);
      }
    }
  }
  return label;
}

namespace {

std::vector<int> canonical_with_flags(const RootedMap& m,
                                      const std::vector<bool>* flags) {
  auto label = canonical_labels(m);
  const std::size_t h = m.half_edge_count();
  std::vector<int> out(1 + 2 * h + (flags ? h : 0));
  out[0] = static_cast<int>(h);
  for (std::size_t x = 0; x < h; ++x) {
    out[1 + label[x]] = label[m.next[x]];
    out[1 + h + label[x]] = label[m.pair[x]];
    if (flags) out[1 + 2 * h + label[x]] = (*flags)[x] ? 1 : 0;
  }
  return out;
}

}  // namespace

std::vector<int> canonical_form(const RootedMap& m) {
  return canonical_with_flags(m, nullptr);
}

std::vector<int> canonical_form(const TreeRootedMap& mt) {
  return canonical_with_flags(mt.map, &mt.in_tree);
}

std::vector<int> canonical_form(const OrientedMap& om) {
  return canonical_with_flags(om.map, &om.is_head);
}

bool tour_with_budget(const RootedMap& m, const std::vector<bool>& in_tree,
                      std::size_t budget, std::vector<TourStep>& out) {
  out.clear();
  int h = m.next[m.root];
  while (h != m.root) {
    if (out.size() >= budget) return false;
    if (in_tree[h]) {
      out.push_back({h, TourEvent::FollowTree});
      h = m.next[m.pair[h]];
    } else {
      out.push_back({h, TourEvent::CrossNonTree});
      h = m.next[h];
    }
  }
  return true;
}

std::vector<TourStep> tour(const TreeRootedMap& mt) {
  std::vector<TourStep> out;
  if (!tour_with_budget(mt.map, mt.in_tree, 2 * mt.map.half_edge_count(), out)) {
    throw Error(ErrorKind::InvalidMap, "tour does not return to the root");
  }
  return out;
}

std::vector<int> edge_representatives(const RootedMap& m) {
  std::vector<int> reps;
  for (std::size_t h = 0; h < m.half_edge_count(); ++h) {
    if (static_cast<int>(h) != m.root && static_cast<int>(h) < m.pair[h]) {
      reps.push_back(static_cast<int>(h));
    }
  }
  return reps;
}

bool is_spanning_tree(const RootedMap& m, const std::vector<bool>& in_tree) {
  if (in_tree.size() != m.half_edge_count() || in_tree[m.root]) return false;
  auto vid = vertex_ids(m);
  std::size_t v = vertex_count(m);
  UnionFind uf(v);
  std::size_t used = 0;
  for (int h : edge_representatives(m)) {
    if (in_tree[h] != in_tree[m.pair[h]]) return false;
    if (!in_tree[h]) continue;
    if (!uf.unite(vid[h], vid[m.pair[h]])) return false;
    ++used;
  }
  return used + 1 == v;
}

std::vector<std::vector<bool>> spanning_trees(const RootedMap& m) {
  auto reps = edge_representatives(m);
  auto vid = vertex_ids(m);
  const std::size_t v = vertex_count(m);
  const std::size_t e = reps.size();
  std::vector<std::vector<bool>> out;
  // Choose v-1 of the e edges; the union-find rejects cycles.
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() + 1 == v) {
      UnionFind uf(v);
      for (int i : pick) {
        if (!uf.unite(vid[reps[i]], vid[m.pair[reps[i]]])) return;
      }
      std::vector<bool> flags(m.half_edge_count(), false);
      for (int i : pick) flags[reps[i]] = flags[m.pair[reps[i]]] = true;
      out.push_back(std::move(flags));
      return;
    }
    for (std::size_t i = start; i < e; ++i) {
      if (e - i < v - 1 - pick.size()) break;
      pick.push_back(static_cast<int>(i));
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace trmap
