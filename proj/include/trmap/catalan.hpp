#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace trmap {

/// Planted plane tree, stored as its tour word over {a, A}.
///
/// Vertices are numbered 0..size() in order of first visit during the tour
/// (0 is the root-vertex). Children are listed in tour order, which is the
/// counterclockwise order following the parent edge.
class PlaneTree {
 public:
  PlaneTree() = default;  // the tree reduced to a root and one vertex

  /// Throws Error(InvalidTree) unless `w` is a parenthesis system.
  static PlaneTree from_word(std::string_view w);
  static PlaneTree from_children(const std::vector<std::vector<int>>& children,
                                 int root = 0);

  const std::string& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size() / 2; }
  std::size_t vertex_count() const noexcept { return size() + 1; }

  std::vector<int> parents() const;
  std::vector<std::vector<int>> children() const;
  std::vector<int> depths() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
  friend auto operator<=>(const PlaneTree&, const PlaneTree&) = default;

 private:
  explicit PlaneTree(std::string w) : word_(std::move(w)) {}
  std::string word_;
};

/// Non-crossing partition of {1..n}; parts are sorted internally and listed
/// by increasing minimum.
class NonCrossingPartition {
 public:
  NonCrossingPartition() = default;

  /// Throws Error(InvalidPartition) if the parts do not partition {1..n}
  /// or cross.
  static NonCrossingPartition from_parts(std::size_t n,
                                         std::vector<std::vector<int>> parts);
  /// `labels[i]` is an arbitrary block label of element i+1.
  static NonCrossingPartition from_labels(const std::vector<int>& labels);

  std::size_t size() const noexcept { return part_of_.size(); }
  const std::vector<std::vector<int>>& parts() const noexcept { return parts_; }
  /// Part index (into parts()) of the 1-based `element`.
  int part_of(int element) const { return part_of_.at(element - 1); }
  std::string to_string() const;

  friend bool operator==(const NonCrossingPartition&,
                         const NonCrossingPartition&) = default;
  friend auto operator<=>(const NonCrossingPartition&,
                          const NonCrossingPartition&) = default;

 private:
  std::vector<std::vector<int>> parts_;
  std::vector<int> part_of_;
};

/// Left-to-right stack scan; `labels[i]` is the block of element i+1.
bool is_non_crossing(const std::vector<int>& labels);

enum class Side : char { Root, Left, Right };

/// Binary tree with leaf activity. Vertex 0 is the root-vertex; every
/// vertex is either a node with both sons or a leaf.
class BinaryTree {
 public:
  struct Vertex {
    int parent = -1;
    int left = -1;
    int right = -1;
    Side side = Side::Root;
    bool active = false;  // meaningful for leaves only

    bool is_leaf() const noexcept { return left < 0; }
  };

  /// The single-leaf tree of size 0.
  BinaryTree();

  /// A node with two active leaves.
  static BinaryTree b1();

  /// Preorder over tokens N, La, Li, Ra, Ri. A size-0 tree is "La"/"Li".
  /// Throws Error(InvalidBinaryTree).
  static BinaryTree parse(std::string_view preorder);
  std::string serialize() const;

  std::size_t size() const;  // node count
  const Vertex& vertex(int id) const { return v_.at(id); }
  std::size_t vertex_count() const noexcept { return v_.size(); }

  /// Leaves in order of appearance around the tree.
  std::vector<int> leaves() const;

  /// Turns `leaf` into a node carrying two active leaves.
  void graft_b1(int leaf);
  /// Turns the node `node`, whose sons are both leaves, back into a leaf
  /// with the given activity. Vertex ids are renumbered.
  void prune_leaves(int node, bool active);
  void set_active(int leaf, bool active);
  void deactivate_all();

  /// The edge from `child` to its father.
  bool is_branching_edge(int child) const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    return a.serialize() == b.serialize();
  }

 private:
  void compact();
  std::vector<Vertex> v_;
};

std::string tree_to_word(const PlaneTree& t);
PlaneTree word_to_tree(std::string_view w);

/// Tree -> partition. The tour word is read two letters at a time, the
/// i-th pair standing for element n+1-i. An opening first letter starts a
/// new part, a closing one rejoins the innermost open part; a closing second
/// letter ends it.
NonCrossingPartition upsilon_inv(const PlaneTree& t);
/// Partition -> tree; elements n down to 1 each contribute the tour steps
/// (i is its part's maximum ? a : A)(i is its part's minimum ? A : a).
PlaneTree upsilon(const NonCrossingPartition& p);

struct ContractedTree {
  PlaneTree tree;
  /// leaf_of_vertex[i] is the leaf of the binary tree whose cluster became
  /// vertex i (first-visit order) of the contracted tree.
  std::vector<int> leaf_of_vertex;
};

/// Contracts every non-branching edge; activity is ignored.
PlaneTree theta(const BinaryTree& b);
ContractedTree theta_detailed(const BinaryTree& b);
NonCrossingPartition big_theta(const BinaryTree& b);

std::vector<PlaneTree> enumerate_trees(std::size_t n);
/// All leaves inactive.
std::vector<BinaryTree> enumerate_binary_trees(std::size_t n);
std::vector<NonCrossingPartition> enumerate_ncps(std::size_t n);

}  // namespace trmap
