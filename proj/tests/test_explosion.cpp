#include <doctest.h>

#include <set>

#include "trmap/error.hpp"
#include "trmap/explosion.hpp"
#include "trmap/orientation.hpp"
#include "trmap/walsh_lehman.hpp"
#include "trmap/words.hpp"

using namespace trmap;

namespace {
NonCrossingPartition ncp(std::size_t n, std::vector<std::vector<int>> parts) {
  return NonCrossingPartition::from_parts(n, std::move(parts));
}
const PlaneTree kEdge = PlaneTree::from_word("aA");
}  // namespace

TEST_CASE("phi on size one") {
  OrientedMap loop = delta(xi_inv("bB"));
  OrientedMap link = delta(xi_inv("aA"));
  CHECK(phi(loop) == TreePartitionPair{kEdge, ncp(2, {{1, 2}})});
  CHECK(phi(link) == TreePartitionPair{kEdge, ncp(2, {{1}, {2}})});
  CHECK(canonical_form(psi(kEdge, ncp(2, {{1, 2}}))) == canonical_form(loop));
  CHECK(canonical_form(psi(kEdge, ncp(2, {{1}, {2}}))) == canonical_form(link));
}

TEST_CASE("phi rejects orientations that are not tree-orientations") {
  TreeRootedMap loop = xi_inv("bB");
  OrientedMap om = delta(loop);
  for (std::size_t h = 0; h < 3; ++h) {
    if (int(h) != loop.map.root) om.is_head[h] = !om.is_head[h];
  }
  CHECK_THROWS_AS(phi(om), Error);
  CHECK_THROWS_AS(psi(kEdge, ncp(1, {{1}})), Error);
}

TEST_CASE("the three-edge example") {
  auto p = big_phi(xi_inv("baAaBA"));
  CHECK(p.tree.word() == "aAaaAA");
  CHECK(p.partition == ncp(4, {{1, 4}, {2}, {3}}));
}

TEST_CASE("phi and psi are inverse") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_paren_shuffle(n, [n](const std::string& w) {
      OrientedMap om = delta(xi_inv(w));
      TreePartitionPair p = phi(om);
      REQUIRE(p.tree.size() == n);
      REQUIRE(p.partition.size() == n + 1);
      REQUIRE(is_tree_orientation(psi(p.tree, p.partition)) == true);
      REQUIRE(canonical_form(psi(p.tree, p.partition)) == canonical_form(om));
    });
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      for (const auto& part : enumerate_ncps(n + 1)) {
        REQUIRE(phi(psi(t, part)) == TreePartitionPair{t, part});
      }
    }
  }
}

TEST_CASE("big_phi is a bijection") {
  for (std::size_t n = 0; n <= 4; ++n) {
    std::set<std::pair<std::string, std::vector<std::vector<int>>>> image;
    for_each_paren_shuffle(n, [&](const std::string& w) {
      TreeRootedMap mt = xi_inv(w);
      TreePartitionPair p = big_phi(mt);
      image.emplace(p.tree.word(), p.partition.parts());
      REQUIRE(canonical_form(big_phi_inv(p)) == canonical_form(mt));
    });
    REQUIRE(image.size() == enumerate_trees(n).size() * enumerate_ncps(n + 1).size());
  }
}
