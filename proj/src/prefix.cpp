#include "trmap/prefix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "trmap/cdv.hpp"
#include "trmap/error.hpp"
#include "trmap/explosion.hpp"
#include "trmap/words.hpp"

namespace trmap {

// ------------------------------------------------------------- prefix maps

std::vector<int> PrefixMap::appearance() const {
  const RootedMap& m = om.map;
  std::vector<int> app(m.half_edge_count(), -1);
  std::vector<TourStep> steps;
  if (!tour_with_budget(m, in_tree, 2 * m.half_edge_count(), steps)) {
    throw Error(ErrorKind::InvalidMap, "prefix-map tour does not close");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    int h = steps[i].half_edge;
    for (int x : {h, m.pair[h]}) {
      if (app[x] < 0) app[x] = static_cast<int>(i);
    }
  }
  app[m.root] = -1;
  return app;
}

void PrefixMap::refresh_orders() {
  const RootedMap& m = om.map;
  auto app = appearance();
  dangling.clear();
  rooting.clear();
  for (std::size_t h = 0; h < m.half_edge_count(); ++h) {
    int x = static_cast<int>(h);
    if (x == m.root || !om.is_head[h]) continue;
    if (m.pair[h] == x) dangling.push_back(x);
    if (active[h]) rooting.push_back(x);
  }
  auto by_appearance = [&](int x, int y) { return app[x] < app[y]; };
  std::sort(dangling.begin(), dangling.end(), by_appearance);
  std::sort(rooting.begin(), rooting.end(), by_appearance);
  rooting.insert(rooting.begin(), m.root);
}

int PrefixMap::corner() const {
  const auto& next = om.map.next;
  int head = rooting.back();
  int x = head;
  while (next[x] != head) x = next[x];
  return x;
}

std::vector<int> PrefixMap::canonical() const {
  const RootedMap& m = om.map;
  auto label = canonical_labels(m);
  const std::size_t h = m.half_edge_count();
  std::vector<int> out(1 + 3 * h);
  out[0] = static_cast<int>(h);
  for (std::size_t x = 0; x < h; ++x) {
    if (label[x] < 0) throw Error(ErrorKind::InvalidMap, "prefix-map is disconnected");
    out[1 + label[x]] = label[m.next[x]];
    out[1 + h + label[x]] = label[m.pair[x]];
    out[1 + 2 * h + label[x]] = (om.is_head[x] ? 1 : 0) + (in_tree[x] ? 2 : 0) +
                                (active[x] ? 4 : 0);
  }
  return out;
}

namespace {

int add_half_edge(PrefixMap& pm, bool head, bool tree, bool active) {
  RootedMap& m = pm.om.map;
  int h = static_cast<int>(m.next.size());
  m.next.push_back(h);
  m.pair.push_back(h);
  pm.om.is_head.push_back(head);
  pm.in_tree.push_back(tree);
  pm.active.push_back(active);
  return h;
}

void insert_after(RootedMap& m, int at, int h) {
  m.next[h] = m.next[at];
  m.next[at] = h;
}

void connect(RootedMap& m, int x, int y) {
  m.pair[x] = y;
  m.pair[y] = x;
}

PrefixMap empty_prefix_map() {
  PrefixMap pm;
  pm.om.map = RootedMap{{0}, {0}, 0};
  pm.om.is_head = {true};
  pm.in_tree = {false};
  pm.active = {false};
  pm.rooting = {0};
  return pm;
}

}  // namespace

PrefixMap build_prefix_map(std::string_view w) {
  require_prefix_shuffle(w);
  PrefixMap pm = empty_prefix_map();
  RootedMap& m = pm.om.map;
  int corner = 0;
  std::vector<int> open_a;  // origin-side half-edges of unpaired a
  std::vector<int> open_b;  // unpaired b heads
  for (char c : w) {
    switch (c) {
      case kOpenA: {
        int p = add_half_edge(pm, false, true, true);
        int q = add_half_edge(pm, true, true, true);
        insert_after(m, corner, p);
        connect(m, p, q);
        open_a.push_back(p);
        corner = q;
        break;
      }
      case kCloseA: {
        int p = open_a.back();
        open_a.pop_back();
        pm.active[p] = pm.active[m.pair[p]] = false;
        corner = p;
        break;
      }
      case kOpenB: {
        int h = add_half_edge(pm, true, false, false);
        insert_after(m, corner, h);
        open_b.push_back(h);
        corner = h;
        break;
      }
      default: {
        int t = add_half_edge(pm, false, false, false);
        insert_after(m, corner, t);
        connect(m, t, open_b.back());
        open_b.pop_back();
        corner = t;
        break;
      }
    }
  }
  pm.refresh_orders();
  return pm;
}

PrefixMap evolve_prefix_map(const PrefixMap& pm, char alpha) {
  PrefixMap out = pm;
  RootedMap& m = out.om.map;
  const int c = pm.corner();
  switch (alpha) {
    case kOpenA: {
      int p = add_half_edge(out, false, true, true);
      int q = add_half_edge(out, true, true, true);
      insert_after(m, c, p);
      connect(m, p, q);
      break;
    }
    case kOpenB:
      insert_after(m, c, add_half_edge(out, true, false, false));
      break;
    case kCloseA: {
      if (pm.rooting.size() < 2) {
        throw Error(ErrorKind::InvalidShuffle, "no active edge to inactivate");
      }
      int h = pm.rooting.back();
      out.active[h] = out.active[m.pair[h]] = false;
      break;
    }
    case kCloseB: {
      if (pm.dangling.empty()) {
        throw Error(ErrorKind::InvalidShuffle, "no dangling head to connect");
      }
      int t = add_half_edge(out, false, false, false);
      insert_after(m, c, t);
      connect(m, t, pm.dangling.back());
      break;
    }
    default:
      throw Error(ErrorKind::InvalidAlphabet, std::string("unknown letter '") + alpha + "'");
  }
  out.refresh_orders();
  return out;
}

EvolutionReport evolution_check(std::string_view w, char alpha) {
  std::string wa(w);
  wa.push_back(alpha);
  if (!is_prefix_shuffle(wa)) return {false, "'" + wa + "' is not a prefix-shuffle"};
  PrefixMap before = build_prefix_map(w);
  PrefixMap predicted = evolve_prefix_map(before, alpha);
  if (predicted.canonical() != build_prefix_map(wa).canonical()) {
    return {false, "prefix-map of '" + wa + "' differs from the evolution rule"};
  }
  auto old_app = before.appearance();
  auto new_app = predicted.appearance();
  for (std::size_t x = 0; x < old_app.size(); ++x) {
    for (std::size_t y = 0; y < old_app.size(); ++y) {
      if ((old_app[x] < old_app[y]) != (new_app[x] < new_app[y])) {
        return {false, "appearance order changed from '" + std::string(w) + "' to '" + wa + "'"};
      }
    }
  }
  return {};
}

// ---------------------------------------------------------- prefix forests

PrefixForest prefix_forest(const PrefixMap& pm) {
  const RootedMap& m = pm.om.map;
  const std::size_t hcount = m.half_edge_count();
  std::vector<bool> dropped(hcount, false);
  for (std::size_t h = 0; h < hcount; ++h) {
    dropped[h] = pm.active[h] && !pm.om.is_head[h];
  }
  auto attached = attach_tails(m.next, pm.om.is_head, dropped);

  PrefixForest forest;
  std::vector<bool> covered(hcount, false);
  auto grow = [&](int root) {
    std::vector<int> heads;
    PlaneTree t = exploded_tree(attached, m.pair, root, &heads);
    for (int h : heads) {
      if (covered[h]) throw Error(ErrorKind::InvalidMap, "prefix-forest trees overlap");
      covered[h] = true;
    }
    return t;
  };
  for (int h : pm.dangling) forest.dangling_trees.push_back(grow(h));
  for (int h : pm.rooting) forest.rooting_trees.push_back(grow(h));
  for (std::size_t h = 0; h < hcount; ++h) {
    if (pm.om.is_head[h] && !covered[h]) {
      throw Error(ErrorKind::InvalidMap, "prefix-forest misses a head");
    }
  }
  return forest;
}

bool check_prop_lambda0(std::string_view w) {
  PrefixForest f = prefix_forest(build_prefix_map(w));
  TreeSequence expected;
  for (const auto& t : f.dangling_trees) {
    expected.letters.push_back('u');
    expected.trees.push_back(t);
  }
  expected.letters.push_back('u');
  for (auto it = f.rooting_trees.rbegin(); it != f.rooting_trees.rend(); ++it) {
    if (it != f.rooting_trees.rbegin()) expected.letters.push_back('v');
    expected.trees.push_back(*it);
  }
  expected.letters.push_back('v');
  return lambda0(w) == expected;
}

// ------------------------------------------------------------ tagged trees

PlaneTree TaggedTree::shape() const { return PlaneTree::from_children(children); }

std::string TaggedTree::serialize() const {
  std::string s;
  std::function<void(int)> emit = [&](int x) {
    bool active = order[x] >= 0;
    char tag = color[x] == Color::White ? 'w' : 'b';
    s.push_back('(');
    s.push_back(active ? static_cast<char>(tag - 'a' + 'A') : tag);
    if (active) s += std::to_string(order[x]);
    for (int c : children[x]) emit(c);
    s.push_back(')');
  };
  emit(0);
  return s;
}

int TaggedTree::first_active(Color c) const {
  int best = -1;
  for (std::size_t x = 0; x < order.size(); ++x) {
    if (color[x] == c && order[x] >= 0 && (best < 0 || order[x] < order[best])) {
      best = static_cast<int>(x);
    }
  }
  return best;
}

int TaggedTree::last_active(Color c) const {
  int best = -1;
  for (std::size_t x = 0; x < order.size(); ++x) {
    if (color[x] == c && order[x] >= 0 && (best < 0 || order[x] > order[best])) {
      best = static_cast<int>(x);
    }
  }
  return best;
}

void TaggedTree::normalize() {
  for (Color c : {Color::White, Color::Black}) {
    std::vector<int> ids;
    for (std::size_t x = 0; x < order.size(); ++x) {
      if (color[x] == c && order[x] >= 0) ids.push_back(static_cast<int>(x));
    }
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return order[a] < order[b]; });
    for (std::size_t r = 0; r < ids.size(); ++r) order[ids[r]] = static_cast<int>(r);
  }
}

void TaggedTree::invert_black_order() {
  normalize();
  int count = 0;
  for (std::size_t x = 0; x < order.size(); ++x) {
    if (color[x] == Color::Black && order[x] >= 0) ++count;
  }
  for (std::size_t x = 0; x < order.size(); ++x) {
    if (color[x] == Color::Black && order[x] >= 0) order[x] = count - 1 - order[x];
  }
}

int TaggedTree::add_leaf(int parent, bool leftmost, Color c, int rank) {
  int id = static_cast<int>(children.size());
  children.emplace_back();
  color.push_back(c);
  order.push_back(rank);
  auto& sons = children.at(parent);
  sons.insert(leftmost ? sons.begin() : sons.end(), id);
  return id;
}

// ---------------------------------------------------------- partition tree

namespace {

TaggedTree build_partition_tree(const PrefixMap& pm, std::vector<int>* face_dangling) {
  const RootedMap& m = pm.om.map;
  const std::size_t hcount = m.half_edge_count();
  auto vid = vertex_ids(m);
  const int vcount = static_cast<int>(vertex_count(m));

  // Corner c(x) is followed by corner c(pair(next(x))) around its face.
  std::vector<int> face(hcount, -1);
  std::vector<std::vector<int>> face_walk;
  auto walk_from = [&](int start) {
    int f = static_cast<int>(face_walk.size());
    face_walk.emplace_back();
    int x = start;
    do {
      face[x] = f;
      face_walk[f].push_back(x);
      x = m.pair[m.next[x]];
    } while (x != start);
  };
  walk_from(m.root);
  for (std::size_t h = 0; h < hcount; ++h) {
    if (face[h] < 0) walk_from(static_cast<int>(h));
  }
  const int fcount = static_cast<int>(face_walk.size());

  // Graph nodes: blacks 0..vcount-1, non-root faces, then v_0 .. v_k.
  const int k = static_cast<int>(pm.dangling.size());
  auto face_node = [&](int f) { return vcount + f - 1; };
  const int v0 = vcount + fcount - 1;
  const int node_count = v0 + k + 1;

  std::vector<int> white_end(hcount, -1);  // white endpoint of E(h)
  std::vector<std::vector<int>> rotation(node_count);
  std::vector<int> root_dangling;
  {
    int current = v0;
    for (int x : face_walk[0]) {
      if (!pm.om.is_head[x]) continue;
      if (x != m.root && m.pair[x] == x) {
        current = v0 + 1 + static_cast<int>(root_dangling.size());
        root_dangling.push_back(x);
      }
      white_end[x] = current;
      rotation[current].push_back(x);
    }
  }
  for (int f = 1; f < fcount; ++f) {
    for (int x : face_walk[f]) {
      if (!pm.om.is_head[x]) continue;
      white_end[x] = face_node(f);
      rotation[face_node(f)].push_back(x);
    }
  }
  for (auto& r : rotation) std::reverse(r.begin(), r.end());
  for (std::size_t h = 0; h < hcount; ++h) {
    // Heads around each black vertex, counterclockwise.
    if (!pm.om.is_head[h]) continue;
    int start = static_cast<int>(h);
    int b = vid[start];
    if (!rotation[b].empty()) continue;
    int x = start;
    do {
      if (pm.om.is_head[x]) rotation[b].push_back(x);
      x = m.next[x];
    } while (x != start);
  }
  if (face_dangling) *face_dangling = root_dangling;

  auto other_end = [&](int node, int h) {
    return node == vid[h] ? white_end[h] : vid[h];
  };

  TaggedTree t;
  std::vector<int> tree_id(node_count, -1);
  auto visit = [&](auto&& self, int node, int via) -> int {
    if (tree_id[node] >= 0) throw Error(ErrorKind::InvalidMap, "partition-tree has a cycle");
    int id = static_cast<int>(t.children.size());
    tree_id[node] = id;
    t.children.emplace_back();
    t.color.push_back(node < vcount ? Color::Black : Color::White);
    t.order.push_back(-1);
    const auto& rot = rotation[node];
    std::size_t start = 0;
    if (via >= 0) {
      start = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), via) - rot.begin()) + 1;
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      int h = rot[(start + i) % rot.size()];
      if (h == via) continue;
      int child = self(self, other_end(node, h), h);
      t.children[id].push_back(child);
    }
    return id;
  };
  visit(visit, v0, -1);
  if (t.vertex_count() != static_cast<std::size_t>(node_count)) {
    throw Error(ErrorKind::InvalidMap, "partition-tree is not connected");
  }

  for (int i = 0; i <= k; ++i) t.order[tree_id[v0 + i]] = i;
  for (std::size_t j = 0; j < pm.rooting.size(); ++j) {
    t.order[tree_id[vid[pm.rooting[j]]]] = static_cast<int>(j);
  }
  return t;
}

}  // namespace

TaggedTree partition_tree(std::string_view w) {
  return build_partition_tree(build_prefix_map(w), nullptr);
}

TaggedTree theta_lambda1(std::string_view w) {
  BinaryTree b = lambda1(w);
  ContractedTree ct = theta_detailed(b);
  TaggedTree t;
  t.children = ct.tree.children();
  const std::size_t n = t.children.size();
  t.color.resize(n);
  t.order.assign(n, -1);
  std::vector<int> vertex_of_leaf(b.vertex_count(), -1);
  for (std::size_t v = 0; v < n; ++v) {
    int leaf = ct.leaf_of_vertex[v];
    vertex_of_leaf[leaf] = static_cast<int>(v);
    t.color[v] = b.vertex(leaf).side == Side::Right ? Color::Black : Color::White;
  }
  int whites = 0;
  int blacks = 0;
  for (int leaf : b.leaves()) {
    if (!b.vertex(leaf).active) continue;
    int v = vertex_of_leaf[leaf];
    t.order[v] = t.color[v] == Color::White ? whites++ : blacks++;
  }
  return t;
}

bool check_prop_lambda1(std::string_view w) {
  PrefixMap pm = build_prefix_map(w);
  std::vector<int> face_dangling;
  TaggedTree p = build_partition_tree(pm, &face_dangling);
  if (face_dangling != pm.dangling) return false;
  TaggedTree q = theta_lambda1(w);
  q.invert_black_order();
  return p.serialize() == q.serialize();
}

namespace {

int next_rank(const TaggedTree& t, Color c) {
  int last = t.last_active(c);
  return last < 0 ? 0 : t.order[last] + 1;
}

EvolutionReport compare_tagged(const TaggedTree& predicted, const TaggedTree& actual,
                               const std::string& what, const std::string& wa) {
  if (predicted.serialize() == actual.serialize()) return {};
  return {false, what + " of '" + wa + "' is " + actual.serialize() +
                     ", the evolution rule predicts " + predicted.serialize()};
}

}  // namespace

EvolutionReport partition_tree_evolution_check(std::string_view w, char alpha) {
  std::string wa(w);
  wa.push_back(alpha);
  if (!is_prefix_shuffle(wa)) return {false, "'" + wa + "' is not a prefix-shuffle"};
  TaggedTree t = partition_tree(w);
  switch (alpha) {
    case kOpenA:
      t.add_leaf(t.last_active(Color::White), true, Color::Black, next_rank(t, Color::Black));
      break;
    case kOpenB:
      t.add_leaf(t.last_active(Color::Black), false, Color::White, next_rank(t, Color::White));
      break;
    case kCloseA: t.order[t.last_active(Color::Black)] = -1; break;
    default: t.order[t.last_active(Color::White)] = -1; break;
  }
  t.normalize();
  return compare_tagged(t, partition_tree(wa), "partition-tree", wa);
}

EvolutionReport theta_lambda1_evolution_check(std::string_view w, char alpha) {
  std::string wa(w);
  wa.push_back(alpha);
  if (!is_prefix_shuffle(wa)) return {false, "'" + wa + "' is not a prefix-shuffle"};
  TaggedTree t = theta_lambda1(w);
  switch (alpha) {
    case kOpenA: {
      int father = t.last_active(Color::White);
      for (std::size_t x = 0; x < t.order.size(); ++x) {
        if (t.color[x] == Color::Black && t.order[x] >= 0) ++t.order[x];
      }
      t.add_leaf(father, true, Color::Black, 0);
      break;
    }
    case kOpenB:
      t.add_leaf(t.first_active(Color::Black), false, Color::White, next_rank(t, Color::White));
      break;
    case kCloseA: t.order[t.first_active(Color::Black)] = -1; break;
    default: t.order[t.last_active(Color::White)] = -1; break;
  }
  t.normalize();
  return compare_tagged(t, theta_lambda1(wa), "theta(lambda1)", wa);
}

}  // namespace trmap
