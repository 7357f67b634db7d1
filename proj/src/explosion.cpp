#include "trmap/explosion.hpp"

#include "trmap/error.hpp"
#include "trmap/orientation.hpp"

namespace trmap {

std::vector<std::vector<int>> attach_tails(const std::vector<int>& next,
                                           const std::vector<bool>& is_head,
                                           const std::vector<bool>& dropped) {
  const std::size_t hcount = next.size();
  std::vector<int> prev(hcount);
  for (std::size_t h = 0; h < hcount; ++h) prev[next[h]] = static_cast<int>(h);

  std::vector<std::vector<int>> attached(hcount);
  std::vector<bool> claimed(hcount, false);
  for (std::size_t h = 0; h < hcount; ++h) {
    if (!is_head[h]) continue;
    std::vector<int> run;
    for (int x = prev[h]; !is_head[x]; x = prev[x]) {
      claimed[x] = true;
      if (!dropped[x]) run.push_back(x);
    }
    attached[h].assign(run.rbegin(), run.rend());
  }
  for (std::size_t h = 0; h < hcount; ++h) {
    if (!is_head[h] && !claimed[h] && !dropped[h]) {
      throw Error(ErrorKind::NotTreeOriented,
                  "tail " + std::to_string(h) + " has no head at its vertex");
    }
  }
  return attached;
}

PlaneTree exploded_tree(const std::vector<std::vector<int>>& attached,
                        const std::vector<int>& pair, int root_head,
                        std::vector<int>* heads_in_order) {
  std::vector<bool> visited(pair.size(), false);
  std::vector<std::vector<int>> children;
  std::vector<int> order;
  auto visit = [&](auto&& self, int head) -> int {
    if (visited[head]) {
      throw Error(ErrorKind::NotTreeOriented, "explosion produced a cycle");
    }
    visited[head] = true;
    int id = static_cast<int>(order.size());
    order.push_back(head);
    children.emplace_back();
    for (int t : attached[head]) {
      int c = self(self, pair[t]);
      children[id].push_back(c);
    }
    return id;
  };
  visit(visit, root_head);
  if (heads_in_order) *heads_in_order = order;
  return PlaneTree::from_children(children);
}

TreePartitionPair phi(const OrientedMap& om) {
  if (!is_tree_orientation(om)) {
    throw Error(ErrorKind::NotTreeOriented, "orientation is not a tree-orientation");
  }
  const RootedMap& m = om.map;
  auto attached = attach_tails(m.next, om.is_head,
                               std::vector<bool>(m.half_edge_count(), false));
  std::vector<int> heads;
  PlaneTree tree = exploded_tree(attached, m.pair, m.root, &heads);
  if (tree.size() != m.edge_count()) {
    throw Error(ErrorKind::NotTreeOriented, "explosion is not spanning");
  }
  auto vid = vertex_ids(m);
  std::vector<int> labels;
  labels.reserve(heads.size());
  for (int h : heads) labels.push_back(vid[h]);
  return {std::move(tree), NonCrossingPartition::from_labels(labels)};
}

OrientedMap psi(const PlaneTree& t, const NonCrossingPartition& p) {
  if (p.size() != t.vertex_count()) {
    throw Error(ErrorKind::SizeMismatch,
                "partition of size " + std::to_string(p.size()) +
                    " does not match a tree with " +
                    std::to_string(t.vertex_count()) + " vertices");
  }
  const std::size_t n = t.size();
  const std::size_t hcount = 2 * n + 1;
  // Vertex c >= 1 is reached by the edge with tail 2c-1 and head 2c.
  auto head_of = [](int v) { return v == 0 ? 0 : 2 * v; };
  auto tail_to = [](int c) { return 2 * c - 1; };

  OrientedMap om;
  om.map.root = 0;
  om.map.next.assign(hcount, -1);
  om.map.pair.assign(hcount, 0);
  om.is_head.assign(hcount, false);
  om.is_head[0] = true;
  for (std::size_t c = 1; c <= n; ++c) {
    int ci = static_cast<int>(c);
    om.map.pair[tail_to(ci)] = head_of(ci);
    om.map.pair[head_of(ci)] = tail_to(ci);
    om.is_head[head_of(ci)] = true;
  }

  auto children = t.children();
  for (const auto& part : p.parts()) {
    std::vector<int> rotation;
    for (auto it = part.rbegin(); it != part.rend(); ++it) {
      int v = *it - 1;
      for (int c : children[v]) rotation.push_back(tail_to(c));
      rotation.push_back(head_of(v));
    }
    for (std::size_t i = 0; i < rotation.size(); ++i) {
      om.map.next[rotation[i]] = rotation[(i + 1) % rotation.size()];
    }
  }
  return om;
}

TreePartitionPair big_phi(const TreeRootedMap& mt) { return phi(delta(mt)); }

TreeRootedMap big_phi_inv(const TreePartitionPair& pair) {
  return gamma(psi(pair.tree, pair.partition));
}

}  // namespace trmap
