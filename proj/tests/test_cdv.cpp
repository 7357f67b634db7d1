#include <doctest.h>

#include <set>

#include "trmap/cdv.hpp"
#include "trmap/error.hpp"
#include "trmap/words.hpp"

using namespace trmap;

namespace {
PlaneTree tree(const char* w) { return PlaneTree::from_word(w); }

std::size_t count_letter(std::string_view w, char c) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), c));
}

struct LeafCounts {
  std::size_t active_left = 0, active_right = 0;
};

LeafCounts leaf_counts(const BinaryTree& b) {
  LeafCounts c;
  for (int leaf : b.leaves()) {
    const auto& v = b.vertex(leaf);
    if (!v.active) continue;
    (v.side == Side::Right ? c.active_right : c.active_left)++;
  }
  return c;
}
}  // namespace

TEST_CASE("sigma") {
  CHECK(sigma(PlaneTree(), PlaneTree()) == tree("aA"));
  CHECK(sigma(tree("aAaA"), tree("aaAA")) == tree("aaAAaaAaAA"));
  CHECK_THROWS_AS(sigma_inv(PlaneTree()), Error);
  for (std::size_t i = 0; i <= 3; ++i) {
    for (std::size_t j = 0; j <= 3; ++j) {
      for (const auto& t1 : enumerate_trees(i)) {
        for (const auto& t2 : enumerate_trees(j)) {
          PlaneTree s = sigma(t1, t2);
          REQUIRE(s.size() == i + j + 1);
          REQUIRE(sigma_inv(s) == std::make_pair(t1, t2));
        }
      }
    }
  }
}

TEST_CASE("tree-sequence text") {
  TreeSequence s = TreeSequence::parse("u[]u[aA]v");
  CHECK(s.letters == std::vector<char>{'u', 'u', 'v'});
  CHECK(s.trees.size() == 2);
  CHECK(s.to_string() == "u[]u[aA]v");
  CHECK(s.last_u() == 1);
  CHECK_THROWS_AS(TreeSequence::parse("u[]"), Error);
}

TEST_CASE("lambda0 stages") {
  CHECK(lambda0("").to_string() == "u[]v");
  CHECK(lambda0("aA").to_string() == "u[aA]v");
  CHECK(lambda0("bB").to_string() == "u[aA]v");
  const char* stages[] = {"u[]v",          "u[]u[]v",      "u[]u[]v[]v",     "u[]u[aA]v",
                          "u[]u[]v[aA]v", "u[aA]v[aA]v", "u[aAaaAA]v"};
  std::string w = "baAaBA";
  for (std::size_t k = 0; k <= w.size(); ++k) CHECK(lambda0(w.substr(0, k)).to_string() == stages[k]);
  CHECK(lambda0_prime(w).size() == 3);
  CHECK_THROWS_AS(lambda0_prime("ba"), Error);
}

TEST_CASE("lambda1 stages") {
  CHECK(lambda1("") == BinaryTree::b1());
  CHECK(lambda1("b").serialize() == "NLaNLaRa");
  CHECK(lambda1("ba").serialize() == "NLaNNLaRaRa");
  CHECK(lambda1("baAaBA").serialize() == "NLaNNNLiRiRiRa");
  CHECK(lambda1_prime("baAaBA").serialize() == "NLiNNNLiRiRiRi");
  CHECK(lambda1_prime("baAaBA").size() == 4);
  CHECK(lambda1_prime("").serialize() == "NLiRi");
  CHECK(lambda1_prime("aA").size() == 2);
  CHECK_THROWS_AS(lambda1_prime("ab"), Error);
}

TEST_CASE("invariants over prefix-shuffles") {
  for (std::size_t len = 0; len <= 8; ++len) {
    for_each_prefix_shuffle(len, [](const std::string& w) {
      std::size_t a = count_letter(w, 'a'), A = count_letter(w, 'A');
      std::size_t b = count_letter(w, 'b'), B = count_letter(w, 'B');
      TreeSequence s = lambda0(w);
      BinaryTree t = lambda1(w);
      REQUIRE(s.count('v') == a - A + 1);
      REQUIRE(s.count('u') == b - B + 1);
      std::size_t edges = 0;
      for (const auto& tr : s.trees) edges += tr.size();
      REQUIRE(edges == A + B);
      REQUIRE(t.size() == a + b + 1);
      LeafCounts c = leaf_counts(t);
      REQUIRE(c.active_right == a - A + 1);
      REQUIRE(c.active_left == b - B + 1);
      REQUIRE(is_compatible(s, t));
    });
  }
}

TEST_CASE("lambda is a bijection") {
  CHECK(lambda("aA") != lambda("bB"));
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<std::pair<std::string, std::string>> image;
    for_each_paren_shuffle(n, [&](const std::string& w) {
      CdvPair p = lambda(w);
      REQUIRE(p.tree.size() == n);
      REQUIRE(p.binary.size() == n + 1);
      REQUIRE(lambda_inv(p) == w);
      image.emplace(p.tree.word(), p.binary.serialize());
    });
    REQUIRE(BigInt(image.size()) == count_paren_shuffles_product(n));
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      for (const auto& b : enumerate_binary_trees(n + 1)) {
        REQUIRE(lambda(lambda_inv(CdvPair{t, b})) == CdvPair{t, b});
      }
    }
  }
}

TEST_CASE("lambda_inv rejects bad pairs") {
  CHECK_THROWS_AS(lambda_inv(CdvPair{tree("aA"), BinaryTree::b1()}), Error);
  BinaryTree active = BinaryTree::parse("NLaNLiRi");
  CHECK_THROWS_AS(lambda_inv(CdvPair{tree("aA"), active}), Error);
}
