#pragma once

#include <vector>

#include "trmap/catalan.hpp"
#include "trmap/planar_map.hpp"

namespace trmap {

struct TreePartitionPair {
  PlaneTree tree;
  NonCrossingPartition partition;

  friend bool operator==(const TreePartitionPair&,
                         const TreePartitionPair&) = default;
};

/// Vertex explosion on a raw rotation system: every tail that is not
/// dropped joins the first head met counterclockwise from it. Returns, per
/// head, its tails in counterclockwise order (empty for non-heads).
/// Throws Error(NotTreeOriented) if some tail has no head at its vertex.
std::vector<std::vector<int>> attach_tails(const std::vector<int>& next,
                                           const std::vector<bool>& is_head,
                                           const std::vector<bool>& dropped);

/// The plane tree hanging from `root_head` once tails are attached;
/// `heads_in_order` receives the head of each tree vertex in first-visit
/// order. Throws Error(NotTreeOriented) on a cycle.
PlaneTree exploded_tree(const std::vector<std::vector<int>>& attached,
                        const std::vector<int>& pair, int root_head,
                        std::vector<int>* heads_in_order = nullptr);

/// Explodes a tree-oriented map into a plane tree (one vertex per head)
/// and the partition of its vertices by original vertex. Throws
/// Error(NotTreeOriented).
TreePartitionPair phi(const OrientedMap& om);

/// Inverse explosion: each part's members are merged into one vertex whose
/// rotation is, member by member in decreasing order, the member's tails
/// followed by its head. Throws Error(SizeMismatch).
OrientedMap psi(const PlaneTree& t, const NonCrossingPartition& p);

TreePartitionPair big_phi(const TreeRootedMap& mt);
TreeRootedMap big_phi_inv(const TreePartitionPair& pair);

}  // namespace trmap
