#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trmap/catalan.hpp"

namespace trmap {

/// Alternating word u t1 u ... t_i v ... t_k v. `trees[j]` sits between
/// `letters[j]` and `letters[j + 1]`.
struct TreeSequence {
  std::vector<char> letters;  // 'u' or 'v'
  std::vector<PlaneTree> trees;

  std::size_t count(char letter) const;
  /// Index in `letters` of the last u; the first v follows it.
  std::size_t last_u() const;

  /// Letters interleaved with bracketed tree words, e.g. "u[]u[aA]v".
  std::string to_string() const;
  /// Throws Error(InvalidFormat).
  static TreeSequence parse(std::string_view s);

  friend bool operator==(const TreeSequence&, const TreeSequence&) = default;
};

/// Grafts t1 as a new last subtree of the root-vertex of t2.
PlaneTree sigma(const PlaneTree& t1, const PlaneTree& t2);
/// Throws Error(InvalidTree) on the size-0 tree.
std::pair<PlaneTree, PlaneTree> sigma_inv(const PlaneTree& t);

TreeSequence lambda0(std::string_view w);
/// Throws Error(IncompleteWord) unless lambda0(w) has one u and one v.
PlaneTree lambda0_prime(std::string_view w);

BinaryTree lambda1(std::string_view w);
/// Throws Error(IncompleteWord) on a word that is not a parenthesis-shuffle.
BinaryTree lambda1_prime(std::string_view w);

struct CdvPair {
  PlaneTree tree;
  BinaryTree binary;

  friend bool operator==(const CdvPair&, const CdvPair&) = default;
};

CdvPair lambda(std::string_view w);

/// Peels letters off the end of the word. Throws Error(SizeMismatch) when
/// the binary tree does not have one more node than the tree has edges and
/// Error(InvalidPair) when some intermediate state is not a valid image.
std::string lambda_inv(const CdvPair& p);

/// The three compatibility conditions between a tree-sequence and a binary
/// tree with activity.
bool is_compatible(const TreeSequence& s, const BinaryTree& b);

}  // namespace trmap
