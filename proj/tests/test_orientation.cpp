#include <doctest.h>

#include <set>

#include "trmap/error.hpp"
#include "trmap/orientation.hpp"
#include "trmap/walsh_lehman.hpp"
#include "trmap/words.hpp"

using namespace trmap;

namespace {
int other_end(const RootedMap& m, int h) { return m.pair[h]; }
}  // namespace

TEST_CASE("delta on size one") {
  TreeRootedMap link = xi_inv("aA");
  OrientedMap om = delta(link);
  CHECK(om.is_head[link.map.root]);
  // The head of the tree edge sits on the non-root vertex.
  auto vid = vertex_ids(link.map);
  for (std::size_t h = 0; h < 3; ++h) {
    if (int(h) == link.map.root) continue;
    CHECK(bool(om.is_head[h]) == (vid[h] != vid[link.map.root]));
  }

  TreeRootedMap loop = xi_inv("bB");
  OrientedMap lo = delta(loop);
  int first = tour(loop)[0].half_edge;
  CHECK(lo.is_head[first]);
  CHECK_FALSE(lo.is_head[other_end(loop.map, first)]);
  CHECK(is_tree_orientation(lo));

  // The reversed loop is a positive cycle.
  OrientedMap rev = lo;
  rev.is_head[first] = false;
  rev.is_head[other_end(loop.map, first)] = true;
  CHECK_FALSE(is_tree_orientation(rev));
  CHECK(positive_cycles(rev).size() == 1);
  CHECK(positive_cycles(lo).empty());
  CHECK_THROWS_AS(gamma(rev), Error);
}

TEST_CASE("gamma on the single vertex") {
  OrientedMap om{RootedMap::vertex(), {true}};
  TreeRootedMap mt = gamma(om);
  CHECK(mt.in_tree == std::vector<bool>{false});
}

TEST_CASE("gamma and delta are inverse") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_paren_shuffle(n, [](const std::string& w) {
      TreeRootedMap mt = xi_inv(w);
      OrientedMap om = delta(mt);
      REQUIRE(gamma(om) == mt);
    });
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& m : enumerate_maps(n)) {
      for (const auto& om : all_orientations(m)) {
        if (!is_tree_orientation(om)) continue;
        REQUIRE(delta(gamma(om)) == om);
      }
    }
  }
}

TEST_CASE("tree-orientations and spanning trees are equinumerous") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& m : enumerate_maps(n)) {
      std::set<std::vector<bool>> images;
      for (const auto& t : spanning_trees(m)) {
        OrientedMap om = delta(TreeRootedMap{m, t});
        REQUIRE(is_tree_orientation(om));
        REQUIRE(positive_cycles(om).empty());
        images.insert(om.is_head);
      }
      std::size_t oriented = 0;
      for (const auto& om : all_orientations(m)) oriented += is_tree_orientation(om);
      REQUIRE(images.size() == spanning_trees(m).size());
      REQUIRE(oriented == images.size());
    }
  }
}

TEST_CASE("oracle agreement") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& m : enumerate_maps(n)) {
      auto all = all_orientations(m);
      REQUIRE(all.size() == std::size_t{1} << n);
      for (const auto& om : all) REQUIRE(is_tree_orientation(om) == is_delta_image(om));
    }
  }
}
