#pragma once

#include <vector>

#include "trmap/planar_map.hpp"

namespace trmap {

/// Tree edges point away from the root; a non-tree edge's head is whichever
/// of its half-edges the tour meets first. The root is a head.
OrientedMap delta(const TreeRootedMap& mt);

/// Recovers the spanning tree by touring it while it grows: an edge joins
/// the tree when its tail is met before its head. Throws
/// Error(NonTreeOrientation) if the tour exceeds 2H steps, the growing
/// submap stops being a tree, or the result is not spanning.
TreeRootedMap gamma(const OrientedMap& om);

/// A simple directed cycle, listed by the tails of its edges in order.
struct DirectedCycle {
  std::vector<int> tails;
};

std::vector<DirectedCycle> directed_cycles(const OrientedMap& om);

/// True iff the root half-edge lies in the region to the right of `c`.
bool is_positive(const OrientedMap& om, const DirectedCycle& c);

std::vector<DirectedCycle> positive_cycles(const OrientedMap& om);

/// Every vertex reachable from the root-vertex along directed edges.
bool is_root_connected(const OrientedMap& om);

bool is_tree_orientation(const OrientedMap& om);

/// Brute-force characterisation: some spanning tree T has delta(T) == om.
bool is_delta_image(const OrientedMap& om);

/// All 2^E orientations of `m`, root marked as a head.
std::vector<OrientedMap> all_orientations(const RootedMap& m);

}  // namespace trmap
