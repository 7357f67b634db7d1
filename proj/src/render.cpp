#include "trmap/render.hpp"

#include <functional>
#include <sstream>

namespace trmap {

std::string map_to_dot(const RootedMap& m, const std::vector<bool>* in_tree,
                       const std::vector<bool>* is_head, const std::string& name) {
  auto vid = vertex_ids(m);
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  node [shape=point, width=0.12];\n";
  for (std::size_t v = 0; v < vertex_count(m); ++v) out << "  v" << v << ";\n";
  out << "  root [shape=none, label=\"root\"];\n";
  out << "  root -> v" << vid[m.root] << " [arrowhead=normal];\n";
  for (std::size_t h = 0; h < m.half_edge_count(); ++h) {
    int x = static_cast<int>(h);
    int y = m.pair[x];
    if (x == m.root) continue;
    if (y == x) {
      // Dangling half-edge of a partial map.
      out << "  d" << x << " [shape=none, label=\"\"];\n";
      out << "  d" << x << " -> v" << vid[x] << " [style=dashed];\n";
      continue;
    }
    if (y < x) continue;
    int from = vid[x];
    int to = vid[y];
    std::string dir = "none";
    if (is_head) {
      if ((*is_head)[x]) std::swap(from, to);
      dir = "forward";
    }
    out << "  v" << from << " -> v" << to << " [dir=" << dir;
    if (in_tree && (*in_tree)[x]) out << ", style=bold, penwidth=2.5";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string tree_to_dot(const PlaneTree& t, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  ordering=out;\n  node [shape=circle, label=\"\", width=0.15];\n";
  auto children = t.children();
  for (std::size_t v = 0; v < children.size(); ++v) out << "  t" << v << ";\n";
  for (std::size_t v = 0; v < children.size(); ++v) {
    for (int c : children[v]) out << "  t" << v << " -> t" << c << " [arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

std::string binary_tree_to_dot(const BinaryTree& b, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  ordering=out;\n  node [label=\"\", width=0.15, height=0.15];\n";
  int next_id = 0;
  std::function<int(int)> emit = [&](int x) {
    int id = next_id++;
    const auto& v = b.vertex(x);
    if (v.is_leaf()) {
      out << "  b" << id << " [shape=" << (v.active ? "circle" : "square") << "];\n";
      return id;
    }
    out << "  b" << id << " [shape=point];\n";
    int l = emit(v.left);
    int r = emit(v.right);
    out << "  b" << id << " -> b" << l << " [arrowhead=none];\n";
    out << "  b" << id << " -> b" << r << " [arrowhead=none];\n";
    return id;
  };
  emit(0);
  out << "}\n";
  return out.str();
}

std::string ncp_to_dot(const NonCrossingPartition& p, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  rankdir=LR;\n  node [shape=circle, width=0.3];\n";
  out << "  { rank=same;";
  for (std::size_t i = 1; i <= p.size(); ++i) out << " e" << i << " [label=\"" << i << "\"];";
  out << " }\n";
  for (std::size_t i = 1; i < p.size(); ++i) {
    out << "  e" << i << " -- e" << i + 1 << " [style=invis];\n";
  }
  for (const auto& part : p.parts()) {
    for (std::size_t j = 1; j < part.size(); ++j) {
      out << "  e" << part[j - 1] << " -- e" << part[j] << " [constraint=false];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace trmap
