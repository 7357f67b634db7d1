#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trmap/planar_map.hpp"

namespace trmap {

/// Tree-rooted map -> parenthesis-shuffle by touring the spanning tree:
/// a/A on the first/second follow of a tree edge, b/B on the first/second
/// crossing of a non-tree edge.
std::string xi(const TreeRootedMap& mt);

/// Parenthesis-shuffle -> tree-rooted map. Half-edge 0 is the root; the
/// others are numbered in order of creation. Throws Error(InvalidShuffle).
TreeRootedMap xi_inv(std::string_view w);

/// Distinct rooted maps with n edges, canonically labeled, in order of
/// first appearance over the shuffles of size n.
std::vector<RootedMap> enumerate_maps(std::size_t n);

}  // namespace trmap
