#include <doctest.h>

#include <set>

#include "trmap/error.hpp"
#include "trmap/walsh_lehman.hpp"
#include "trmap/words.hpp"

using namespace trmap;

TEST_CASE("size one") {
  TreeRootedMap link = xi_inv("aA");
  CHECK(vertex_count(link.map) == 2);
  CHECK(xi(link) == "aA");
  TreeRootedMap loop = xi_inv("bB");
  CHECK(vertex_count(loop.map) == 1);
  CHECK(xi(loop) == "bB");
}

TEST_CASE("a three-edge map with one chord") {
  TreeRootedMap mt = xi_inv("baAaBA");
  auto v = validate(mt.map);
  REQUIRE(v.ok);
  CHECK(v.stats.edges == 3);
  CHECK(v.stats.vertices == 3);
  CHECK(v.stats.faces == 2);
  std::size_t tree_half_edges = 0;
  for (bool b : mt.in_tree) tree_half_edges += b;
  CHECK(tree_half_edges == 4);
  CHECK(xi(mt) == "baAaBA");
}

TEST_CASE("rejects malformed words") {
  CHECK_THROWS_AS(xi_inv("ab"), Error);
  CHECK_THROWS_AS(xi_inv("Aa"), Error);
  CHECK_THROWS_AS(xi_inv("aX"), Error);
}

TEST_CASE("round trips and counts") {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<std::vector<int>> forms;
    for_each_paren_shuffle(n, [&](const std::string& w) {
      TreeRootedMap mt = xi_inv(w);
      REQUIRE(mt.map.edge_count() == n);
      REQUIRE(validate(mt.map).ok);
      REQUIRE(is_spanning_tree(mt.map, mt.in_tree));
      REQUIRE(xi(mt) == w);
      forms.insert(canonical_form(mt));
    });
    REQUIRE(BigInt(forms.size()) == count_paren_shuffles_product(n));
  }
}

TEST_CASE("xi_inv after xi on enumerated maps") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& m : enumerate_maps(n)) {
      for (const auto& t : spanning_trees(m)) {
        TreeRootedMap mt{m, t};
        REQUIRE(canonical_form(xi_inv(xi(mt))) == canonical_form(mt));
      }
    }
  }
}
