#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trmap/catalan.hpp"
#include "trmap/planar_map.hpp"

namespace trmap {

/// Oriented map of a prefix-shuffle together with its dangling heads and
/// active edges. Dangling heads are fixed points of `pair`, like the root.
struct PrefixMap {
  OrientedMap om;
  std::vector<bool> in_tree;  // spanning tree T_w
  std::vector<bool> active;   // both half-edges of every active edge
  std::vector<int> dangling;  // dangling heads in appearance order
  std::vector<int> rooting;   // root, then heads of active edges, in appearance order

  /// Recomputes `dangling` and `rooting` from the flags.
  void refresh_orders();
  /// The half-edge preceding the last rooting head counterclockwise; new
  /// half-edges are inserted right after it.
  int corner() const;
  /// First tour step meeting each half-edge's edge, -1 if never met; the
  /// root gets -1 as well and precedes everything.
  std::vector<int> appearance() const;

  /// Relabelling-invariant serialization of the map and all its tags.
  std::vector<int> canonical() const;
};

PrefixMap build_prefix_map(std::string_view w);

/// M_{w alpha} predicted from M_w by the four evolution rules.
PrefixMap evolve_prefix_map(const PrefixMap& pm, char alpha);

struct EvolutionReport {
  bool ok = true;
  std::string message;
};

/// Diffs build_prefix_map(w + alpha) against evolve_prefix_map(M_w, alpha)
/// and checks that the appearance order of old half-edges is unchanged.
EvolutionReport evolution_check(std::string_view w, char alpha);

struct PrefixForest {
  std::vector<PlaneTree> dangling_trees;  // rooted on h_1 .. h_k
  std::vector<PlaneTree> rooting_trees;   // rooted on h'_1 .. h'_l
};

/// Deletes the tails of active edges and explodes every vertex. Throws
/// Error(InvalidMap) if the result is not a forest covering every head.
PrefixForest prefix_forest(const PrefixMap& pm);

/// lambda0(w) == u t_1 u .. u t_k u t'_l v .. v t'_1 v for the prefix-forest.
bool check_prop_lambda0(std::string_view w);

enum class Color : char { White, Black };

/// Plane tree whose vertices carry a colour and, when active, their rank
/// among the active vertices of that colour. Vertex 0 is the root-vertex.
struct TaggedTree {
  std::vector<std::vector<int>> children;
  std::vector<Color> color;
  std::vector<int> order;  // -1 when inactive

  std::size_t vertex_count() const noexcept { return children.size(); }
  PlaneTree shape() const;
  /// Preorder, e.g. "(W0(B0)(w))": upper case and rank when active.
  std::string serialize() const;
  /// Active vertex of colour `c` with the smallest/largest rank, or -1.
  int first_active(Color c) const;
  int last_active(Color c) const;
  /// Renumbers the ranks of each colour densely, keeping their order.
  void normalize();
  /// Reverses the ranks of the active black vertices.
  void invert_black_order();
  int add_leaf(int parent, bool leftmost, Color c, int order);
};

/// P_w with white vertices for faces (v_0 .. v_k in the root-face) and
/// black ones for vertices of M_w.
TaggedTree partition_tree(std::string_view w);

/// theta(lambda1(w)) with left leaves white and right leaves black, each
/// ranked by order of appearance among active leaves of its side.
TaggedTree theta_lambda1(std::string_view w);

/// P_w equals theta(lambda1(w)) with colours, activity, white order equal
/// and black order inverse; also checks that the dangling heads appear in
/// the same order around the root-face and around T_w.
bool check_prop_lambda1(std::string_view w);

/// The partition-tree evolution rules, diffed against partition_tree.
EvolutionReport partition_tree_evolution_check(std::string_view w, char alpha);
/// The theta(lambda1) evolution rules, diffed against theta_lambda1.
EvolutionReport theta_lambda1_evolution_check(std::string_view w, char alpha);

}  // namespace trmap
