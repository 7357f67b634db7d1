#include "trmap/catalan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "trmap/error.hpp"
#include "trmap/words.hpp"

namespace trmap {

// ---------------------------------------------------------------- PlaneTree

PlaneTree PlaneTree::from_word(std::string_view w) {
  bool ok = false;
  try {
    ok = is_paren_system(w);
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) {
    throw Error(ErrorKind::InvalidTree,
                "'" + std::string(w) + "' is not a parenthesis system");
  }
  return PlaneTree(std::string(w));
}

PlaneTree PlaneTree::from_children(const std::vector<std::vector<int>>& children,
                                   int root) {
  std::string w;
  std::vector<bool> seen(children.size(), false);
  std::function<void(int)> visit = [&](int v) {
    if (seen.at(v)) throw Error(ErrorKind::InvalidTree, "children form a cycle");
    seen[v] = true;
    for (int c : children[v]) {
      w.push_back(kOpenA);
      visit(c);
      w.push_back(kCloseA);
    }
  };
  visit(root);
  return PlaneTree(std::move(w));
}

std::vector<int> PlaneTree::parents() const {
  std::vector<int> parent(vertex_count(), -1);
  std::vector<int> stack{0};
  int next = 1;
  for (char c : word_) {
    if (c == kOpenA) {
      parent[next] = stack.back();
      stack.push_back(next++);
    } else {
      stack.pop_back();
    }
  }
  return parent;
}

std::vector<std::vector<int>> PlaneTree::children() const {
  std::vector<std::vector<int>> ch(vertex_count());
  auto parent = parents();
  for (std::size_t v = 1; v < parent.size(); ++v) {
    ch[parent[v]].push_back(static_cast<int>(v));
  }
  return ch;
}

std::vector<int> PlaneTree::depths() const {
  auto parent = parents();
  std::vector<int> depth(parent.size(), 0);
  for (std::size_t v = 1; v < parent.size(); ++v) depth[v] = depth[parent[v]] + 1;
  return depth;
}

std::string tree_to_word(const PlaneTree& t) { return t.word(); }
PlaneTree word_to_tree(std::string_view w) { return PlaneTree::from_word(w); }

// ----------------------------------------------------- NonCrossingPartition

bool is_non_crossing(const std::vector<int>& labels) {
  std::map<int, int> last;
  for (std::size_t i = 0; i < labels.size(); ++i) last[labels[i]] = static_cast<int>(i);
  std::map<int, bool> opened;
  std::vector<int> stack;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int p = labels[i];
    bool is_last = last[p] == static_cast<int>(i);
    if (!opened[p]) {
      opened[p] = true;
      if (!is_last) stack.push_back(p);
      continue;
    }
    if (stack.empty() || stack.back() != p) return false;
    if (is_last) stack.pop_back();
  }
  return true;
}

NonCrossingPartition NonCrossingPartition::from_labels(
    const std::vector<int>& labels) {
  if (!is_non_crossing(labels)) {
    throw Error(ErrorKind::InvalidPartition, "partition is crossing");
  }
  NonCrossingPartition p;
  std::map<int, int> index;
  p.part_of_.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = index.emplace(labels[i], static_cast<int>(p.parts_.size()));
    if (fresh) p.parts_.emplace_back();
    p.parts_[it->second].push_back(static_cast<int>(i) + 1);
    p.part_of_[i] = it->second;
  }
  return p;
}

NonCrossingPartition NonCrossingPartition::from_parts(
    std::size_t n, std::vector<std::vector<int>> parts) {
  std::vector<int> labels(n, -1);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].empty()) throw Error(ErrorKind::InvalidPartition, "empty part");
    for (int e : parts[k]) {
      if (e < 1 || static_cast<std::size_t>(e) > n) {
        throw Error(ErrorKind::InvalidPartition,
                    "element " + std::to_string(e) + " out of range");
      }
      if (labels[e - 1] >= 0) {
        throw Error(ErrorKind::InvalidPartition,
                    "element " + std::to_string(e) + " listed twice");
      }
      labels[e - 1] = static_cast<int>(k);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] < 0) {
      throw Error(ErrorKind::InvalidPartition,
                  "element " + std::to_string(i + 1) + " missing");
    }
  }
  return from_labels(labels);
}

std::string NonCrossingPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) os << ',';
    os << '{';
    for (std::size_t j = 0; j < parts_[k].size(); ++j) {
      if (j) os << ',';
      os << parts_[k][j];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

// -------------------------------------------------------------- BinaryTree

BinaryTree::BinaryTree() : v_(1) {}

BinaryTree BinaryTree::b1() {
  BinaryTree b;
  b.graft_b1(0);
  return b;
}

std::size_t BinaryTree::size() const {
  std::size_t n = 0;
  for (const auto& x : v_) n += x.is_leaf() ? 0 : 1;
  return n;
}

std::vector<int> BinaryTree::leaves() const {
  std::vector<int> out;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (v_[x].is_leaf()) {
      out.push_back(x);
    } else {
      stack.push_back(v_[x].right);
      stack.push_back(v_[x].left);
    }
  }
  return out;
}

void BinaryTree::graft_b1(int leaf) {
  if (!v_.at(leaf).is_leaf()) {
    throw Error(ErrorKind::InvalidBinaryTree, "graft target is not a leaf");
  }
  int l = static_cast<int>(v_.size());
  int r = l + 1;
  v_.push_back(Vertex{leaf, -1, -1, Side::Left, true});
  v_.push_back(Vertex{leaf, -1, -1, Side::Right, true});
  v_[leaf].left = l;
  v_[leaf].right = r;
  v_[leaf].active = false;
}

void BinaryTree::prune_leaves(int node, bool active) {
  Vertex& x = v_.at(node);
  if (x.is_leaf() || !v_[x.left].is_leaf() || !v_[x.right].is_leaf()) {
    throw Error(ErrorKind::InvalidBinaryTree, "sons of pruned node must be leaves");
  }
  x.left = x.right = -1;
  x.active = active;
  compact();
}

void BinaryTree::set_active(int leaf, bool active) {
  if (!v_.at(leaf).is_leaf()) {
    throw Error(ErrorKind::InvalidBinaryTree, "only leaves carry activity");
  }
  v_[leaf].active = active;
}

void BinaryTree::deactivate_all() {
  for (auto& x : v_) x.active = false;
}

bool BinaryTree::is_branching_edge(int child) const {
  const Vertex& c = v_.at(child);
  if (c.parent < 0) {
    throw Error(ErrorKind::InvalidBinaryTree, "root-vertex has no father edge");
  }
  Side ps = v_[c.parent].side;
  if (c.side == Side::Right) return ps == Side::Left || ps == Side::Root;
  return ps == Side::Right;
}

void BinaryTree::compact() {
  std::vector<Vertex> out;
  std::function<int(int, int)> copy = [&](int x, int parent) {
    int id = static_cast<int>(out.size());
    out.push_back(v_[x]);
    out[id].parent = parent;
    if (!v_[x].is_leaf()) {
      int l = copy(v_[x].left, id);
      int r = copy(v_[x].right, id);
      out[id].left = l;
      out[id].right = r;
    }
    return id;
  };
  copy(0, -1);
  v_ = std::move(out);
}

std::string BinaryTree::serialize() const {
  std::string s;
  std::function<void(int)> emit = [&](int x) {
    const Vertex& v = v_[x];
    if (!v.is_leaf()) {
      s.push_back('N');
      emit(v.left);
      emit(v.right);
      return;
    }
    s.push_back(v.side == Side::Right ? 'R' : 'L');
    s.push_back(v.active ? 'a' : 'i');
  };
  emit(0);
  return s;
}

BinaryTree BinaryTree::parse(std::string_view s) {
  BinaryTree b;
  b.v_.clear();
  std::size_t pos = 0;
  std::function<int(int, Side)> parse_at = [&](int parent, Side side) -> int {
    if (pos >= s.size()) {
      throw Error(ErrorKind::InvalidBinaryTree, "unexpected end of input");
    }
    int id = static_cast<int>(b.v_.size());
    b.v_.push_back(Vertex{parent, -1, -1, side, false});
    char c = s[pos++];
    if (c == 'N') {
      int l = parse_at(id, Side::Left);
      int r = parse_at(id, Side::Right);
      b.v_[id].left = l;
      b.v_[id].right = r;
      return id;
    }
    if (c != 'L' && c != 'R') {
      throw Error(ErrorKind::InvalidBinaryTree,
                  "unexpected token '" + std::string(1, c) + "'");
    }
    Side expected = side == Side::Right ? Side::Right : Side::Left;
    if ((c == 'R') != (expected == Side::Right)) {
      throw Error(ErrorKind::InvalidBinaryTree,
                  "leaf side does not match its position at offset " +
                      std::to_string(pos - 1));
    }
    if (pos >= s.size() || (s[pos] != 'a' && s[pos] != 'i')) {
      throw Error(ErrorKind::InvalidBinaryTree, "leaf activity must be 'a' or 'i'");
    }
    b.v_[id].active = s[pos++] == 'a';
    return id;
  };
  parse_at(-1, Side::Root);
  if (pos != s.size()) {
    throw Error(ErrorKind::InvalidBinaryTree, "trailing characters");
  }
  return b;
}

// ----------------------------------------------------------- Upsilon, theta

// Counterclockwise around the exterior cell the elements are met from the
// largest to the smallest, so tour step pair i is element n - i.
NonCrossingPartition upsilon_inv(const PlaneTree& t) {
  const std::string& w = t.word();
  const std::size_t n = t.size();
  std::vector<int> labels(n);
  std::vector<int> open;  // parts whose odd-depth vertex is on the current path
  int next_part = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    int part;
    if (w[2 * i] == kOpenA) {
      part = next_part++;
      open.push_back(part);
    } else {
      part = open.back();
    }
    labels[n - 1 - i] = part;
    if (w[2 * i + 1] == kCloseA) open.pop_back();
  }
  return NonCrossingPartition::from_labels(labels);
}

PlaneTree upsilon(const NonCrossingPartition& p) {
  std::string w;
  w.reserve(2 * p.size());
  for (int i = static_cast<int>(p.size()); i >= 1; --i) {
    const auto& part = p.parts()[p.part_of(i)];
    w.push_back(part.back() == i ? kOpenA : kCloseA);
    w.push_back(part.front() == i ? kCloseA : kOpenA);
  }
  return PlaneTree::from_word(w);
}

ContractedTree theta_detailed(const BinaryTree& b) {
  ContractedTree out;
  std::string w;
  std::vector<int> cluster(b.vertex_count(), -1);
  int next = 1;
  std::function<void(int)> walk = [&](int x) {
    const auto& v = b.vertex(x);
    if (v.is_leaf()) {
      if (out.leaf_of_vertex.size() <= static_cast<std::size_t>(cluster[x])) {
        out.leaf_of_vertex.resize(cluster[x] + 1, -1);
      }
      out.leaf_of_vertex[cluster[x]] = x;
      return;
    }
    for (int c : {v.left, v.right}) {
      if (b.is_branching_edge(c)) {
        cluster[c] = next++;
        w.push_back(kOpenA);
        walk(c);
        w.push_back(kCloseA);
      } else {
        cluster[c] = cluster[x];
        walk(c);
      }
    }
  };
  cluster[0] = 0;
  walk(0);
  out.tree = PlaneTree::from_word(w);
  out.leaf_of_vertex.resize(out.tree.vertex_count(), -1);
  return out;
}

PlaneTree theta(const BinaryTree& b) { return theta_detailed(b).tree; }

NonCrossingPartition big_theta(const BinaryTree& b) {
  return upsilon_inv(theta(b));
}

// ------------------------------------------------------------ enumerations

std::vector<PlaneTree> enumerate_trees(std::size_t n) {
  std::vector<PlaneTree> out;
  for (auto& w : enumerate_paren_systems(n)) out.push_back(PlaneTree::from_word(w));
  return out;
}

std::vector<BinaryTree> enumerate_binary_trees(std::size_t n) {
  std::vector<std::vector<std::string>> by_size(n + 1);
  // Preorder strings without side letters: 'N' for nodes, 'x' for leaves.
  by_size[0] = {"x"};
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 0; k < m; ++k) {
      for (const auto& l : by_size[k]) {
        for (const auto& r : by_size[m - 1 - k]) by_size[m].push_back("N" + l + r);
      }
    }
  }
  std::vector<BinaryTree> out;
  for (const auto& shape : by_size[n]) {
    std::string s;
    std::size_t pos = 0;
    std::function<void(Side)> render = [&](Side side) {
      if (shape[pos++] == 'N') {
        s.push_back('N');
        render(Side::Left);
        render(Side::Right);
      } else {
        s += side == Side::Right ? "Ri" : "Li";
      }
    };
    render(Side::Root);
    out.push_back(BinaryTree::parse(s));
  }
  return out;
}

std::vector<NonCrossingPartition> enumerate_ncps(std::size_t n) {
  std::vector<NonCrossingPartition> out;
  std::vector<int> labels;
  std::vector<int> last;  // last element (0-based) of each part so far
  std::function<void()> grow = [&]() {
    std::size_t i = labels.size();
    if (i == n) {
      out.push_back(NonCrossingPartition::from_labels(labels));
      return;
    }
    for (std::size_t p = 0; p <= last.size(); ++p) {
      if (p < last.size()) {
        // Joining i to part p links last[p] and i; any other part with an
        // element strictly inside that gap must not also have one before it.
        bool crosses = false;
        for (std::size_t q = 0; q < last.size() && !crosses; ++q) {
          if (q == p) continue;
          bool inside = false, before = false;
          for (std::size_t j = 0; j < i; ++j) {
            if (labels[j] != static_cast<int>(q)) continue;
            if (static_cast<int>(j) > last[p]) inside = true;
            if (static_cast<int>(j) < last[p]) before = true;
          }
          crosses = inside && before;
        }
        if (crosses) continue;
        int saved = last[p];
        labels.push_back(static_cast<int>(p));
        last[p] = static_cast<int>(i);
        grow();
        last[p] = saved;
        labels.pop_back();
      } else {
        labels.push_back(static_cast<int>(p));
        last.push_back(static_cast<int>(i));
        grow();
        last.pop_back();
        labels.pop_back();
      }
    }
  };
  grow();
  return out;
}

}  // namespace trmap
