#pragma once

#include <string>
#include <vector>

#include "trmap/catalan.hpp"
#include "trmap/planar_map.hpp"

namespace trmap {

// Graphviz DOT emitters. Output depends only on the input value.

/// Vertices as points, a root arrow, tree edges bold when `in_tree` is
/// given, and arrowheads on heads when `is_head` is given.
std::string map_to_dot(const RootedMap& m, const std::vector<bool>* in_tree = nullptr,
                       const std::vector<bool>* is_head = nullptr,
                       const std::string& name = "map");
std::string tree_to_dot(const PlaneTree& t, const std::string& name = "tree");
/// Active leaves are circles, inactive ones squares.
std::string binary_tree_to_dot(const BinaryTree& b, const std::string& name = "binary_tree");
/// Elements on a line, consecutive members of a part joined by arcs.
std::string ncp_to_dot(const NonCrossingPartition& p, const std::string& name = "partition");

}  // namespace trmap
