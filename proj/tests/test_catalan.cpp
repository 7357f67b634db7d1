#include <doctest.h>

#include <set>

#include "trmap/catalan.hpp"
#include "trmap/cdv.hpp"
#include "trmap/error.hpp"
#include "trmap/words.hpp"

using namespace trmap;

namespace {
NonCrossingPartition ncp(std::size_t n, std::vector<std::vector<int>> parts) {
  return NonCrossingPartition::from_parts(n, std::move(parts));
}
}  // namespace

TEST_CASE("tree words") {
  CHECK(tree_to_word(PlaneTree()) == "");
  CHECK(word_to_tree("aA").size() == 1);
  CHECK(word_to_tree("aA").vertex_count() == 2);
  CHECK_THROWS_AS(word_to_tree("aAA"), Error);
  CHECK_THROWS_AS(word_to_tree("ab"), Error);
  auto trees = enumerate_trees(4);
  REQUIRE(trees.size() == 14);
  for (const auto& t : trees) CHECK(word_to_tree(tree_to_word(t)) == t);
}

TEST_CASE("tree structure") {
  PlaneTree t = word_to_tree("aaAaAA");
  CHECK(t.parents() == std::vector<int>{-1, 0, 1, 1});
  CHECK(t.depths() == std::vector<int>{0, 1, 2, 2});
  CHECK(PlaneTree::from_children(t.children()) == t);
}

TEST_CASE("non-crossing partitions") {
  CHECK(is_non_crossing({0, 1, 0, 2}));
  CHECK_FALSE(is_non_crossing({0, 1, 0, 1}));
  CHECK_THROWS_AS(ncp(4, {{1, 3}, {2, 4}}), Error);
  CHECK_THROWS_AS(ncp(3, {{1, 2}}), Error);
  auto p = NonCrossingPartition::from_labels({7, 3, 3, 7});
  CHECK(p.parts() == std::vector<std::vector<int>>{{1, 4}, {2, 3}});
  CHECK(p.part_of(3) == 1);
}

TEST_CASE("upsilon small fixtures") {
  CHECK(upsilon_inv(word_to_tree("aA")) == ncp(1, {{1}}));
  CHECK(upsilon_inv(word_to_tree("aaAA")) == ncp(2, {{1, 2}}));
  CHECK(upsilon_inv(word_to_tree("aAaA")) == ncp(2, {{1}, {2}}));
  CHECK(upsilon(ncp(0, {})) == PlaneTree());
}

TEST_CASE("upsilon on a partition with two non-trivial parts") {
  auto p = ncp(8, {{1, 4, 5}, {2}, {3}, {6, 8}, {7}});
  PlaneTree t = upsilon(p);
  CHECK(t.size() == 8);
  CHECK(upsilon_inv(t) == p);
  // A part of size k is an odd-depth vertex with k incident edges.
  auto depths = t.depths();
  auto children = t.children();
  std::multiset<std::size_t> degrees;
  for (std::size_t v = 0; v < children.size(); ++v) {
    if (depths[v] % 2 == 1) degrees.insert(children[v].size() + 1);
  }
  CHECK(degrees == std::multiset<std::size_t>{1, 1, 1, 2, 3});
}

TEST_CASE("upsilon is a bijection") {
  for (std::size_t n = 0; n <= 6; ++n) {
    auto trees = enumerate_trees(n);
    auto parts = enumerate_ncps(n);
    REQUIRE(trees.size() == parts.size());
    std::set<NonCrossingPartition> seen;
    for (const auto& t : trees) {
      auto p = upsilon_inv(t);
      REQUIRE(p.size() == n);
      REQUIRE(upsilon(p) == t);
      seen.insert(p);
    }
    REQUIRE(seen.size() == parts.size());
    for (const auto& p : parts) REQUIRE(upsilon_inv(upsilon(p)) == p);
  }
}

TEST_CASE("binary trees") {
  BinaryTree b = BinaryTree::b1();
  CHECK(b.serialize() == "NLaRa");
  CHECK(b.size() == 1);
  CHECK(BinaryTree::parse("NLaRa") == b);
  CHECK(BinaryTree().serialize() == "Li");
  CHECK_THROWS_AS(BinaryTree::parse("NLa"), Error);
  CHECK_THROWS_AS(BinaryTree::parse("NRaLa"), Error);
  const auto& root = b.vertex(0);
  CHECK(b.is_branching_edge(root.right));
  CHECK_FALSE(b.is_branching_edge(root.left));
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& t : enumerate_binary_trees(n)) {
      REQUIRE(t.leaves().size() == t.size() + 1);
      REQUIRE(BinaryTree::parse(t.serialize()) == t);
    }
  }
}

TEST_CASE("theta") {
  CHECK(theta(BinaryTree::b1()) == word_to_tree("aA"));
  CHECK(big_theta(BinaryTree::b1()) == ncp(1, {{1}}));
  BinaryTree la = lambda1_prime("aA");
  CHECK(la.size() == 2);
  CHECK(theta(la) == word_to_tree("aAaA"));
  CHECK(big_theta(la) == ncp(2, {{1}, {2}}));
  CHECK(big_theta(lambda1_prime("bB")) == ncp(2, {{1, 2}}));
}

TEST_CASE("big_theta is a bijection") {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<NonCrossingPartition> image;
    for (const auto& b : enumerate_binary_trees(n)) {
      REQUIRE(theta(b).size() == n);
      image.insert(big_theta(b));
    }
    REQUIRE(image.size() == enumerate_ncps(n).size());
  }
}

TEST_CASE("enumerators") {
  CHECK(enumerate_trees(3).size() == 5);
  CHECK(enumerate_ncps(0).size() == 1);
  CHECK(enumerate_binary_trees(4).size() == 14);
}
