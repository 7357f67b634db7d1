#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace trmap {

/// Rooted planar map as a rotation system on half-edges 0..H-1.
///
/// `next` is the counterclockwise successor around each vertex. `pair`
/// matches half-edges into edges; its unique fixed point is the dangling
/// root half-edge, so H = 2E + 1.
struct RootedMap {
  std::vector<int> next;
  std::vector<int> pair;
  int root = 0;

  std::size_t half_edge_count() const noexcept { return next.size(); }
  std::size_t edge_count() const noexcept { return (next.size() - 1) / 2; }

  /// The single vertex carrying only the root.
  static RootedMap vertex();

  friend bool operator==(const RootedMap&, const RootedMap&) = default;
};

/// Map plus a distinguished spanning tree, flagged on both half-edges of
/// each tree edge.
struct TreeRootedMap {
  RootedMap map;
  std::vector<bool> in_tree;

  friend bool operator==(const TreeRootedMap&, const TreeRootedMap&) = default;
};

/// Map plus an orientation: exactly one head per edge; the root is a head.
struct OrientedMap {
  RootedMap map;
  std::vector<bool> is_head;

  friend bool operator==(const OrientedMap&, const OrientedMap&) = default;
};

struct MapStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
};

enum class Violation {
  None,
  BadPermutation,
  BadPairing,
  BadRoot,
  Disconnected,
  GenusViolation,
};

struct Validation {
  bool ok = false;
  Violation violation = Violation::None;
  MapStats stats;
  std::string message;
};

Validation validate(const RootedMap& m);
/// Throws Error(InvalidMap) when validate() fails.
void require_valid(const RootedMap& m);

/// Vertex index per half-edge; vertices numbered by smallest half-edge.
std::vector<int> vertex_ids(const RootedMap& m);
std::size_t vertex_count(const RootedMap& m);
std::size_t face_count(const RootedMap& m);

/// Applies the relabeling h -> perm[h].
RootedMap relabel(const RootedMap& m, const std::vector<int>& perm);

/// Canonical label of each half-edge: order of first discovery in a
/// breadth-first search from the root over (next, pair).
std::vector<int> canonical_labels(const RootedMap& m);

/// Equal for two maps iff they are isomorphic as rooted maps.
std::vector<int> canonical_form(const RootedMap& m);
std::vector<int> canonical_form(const TreeRootedMap& mt);
std::vector<int> canonical_form(const OrientedMap& om);

enum class TourEvent : char { FollowTree, CrossNonTree };

struct TourStep {
  int half_edge;
  TourEvent event;
};

/// Counterclockwise tour of the spanning tree starting after the root.
/// Each non-root half-edge appears exactly once.
std::vector<TourStep> tour(const TreeRootedMap& mt);

/// Same stepping rule for any tree marking; stops after `budget` steps
/// (returns false in that case).
bool tour_with_budget(const RootedMap& m, const std::vector<bool>& in_tree,
                      std::size_t budget, std::vector<TourStep>& out);

/// The smaller half-edge of each edge, in increasing order.
std::vector<int> edge_representatives(const RootedMap& m);

bool is_spanning_tree(const RootedMap& m, const std::vector<bool>& in_tree);
/// Every spanning tree as a half-edge flag vector.
std::vector<std::vector<bool>> spanning_trees(const RootedMap& m);

}  // namespace trmap
