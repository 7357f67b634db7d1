#include <doctest.h>

#include "trmap/cdv.hpp"
#include "trmap/error.hpp"
#include "trmap/json_io.hpp"
#include "trmap/orientation.hpp"
#include "trmap/render.hpp"
#include "trmap/walsh_lehman.hpp"
#include "trmap/words.hpp"

using namespace trmap;

namespace {
std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++k;
  return k;
}
}  // namespace

TEST_CASE("map json") {
  CHECK(map_to_json(RootedMap::vertex()).dump() == R"({"alpha":[0],"h":1,"root":0,"sigma":[0]})");
  for_each_paren_shuffle(3, [](const std::string& w) {
    TreeRootedMap mt = xi_inv(w);
    ParsedMap p = map_from_json(map_to_json(mt));
    REQUIRE(p.map == mt.map);
    REQUIRE(p.in_tree == mt.in_tree);
    REQUIRE_FALSE(p.is_head);
    OrientedMap om = delta(mt);
    ParsedMap q = map_from_json(map_to_json(om));
    REQUIRE(q.is_head == om.is_head);
  });
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"h":1})")), Error);
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"h":2,"sigma":[0],"alpha":[0],"root":0})")), Error);
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"h":3,"sigma":[0,1,2],"alpha":[0,2,1],"root":0})")),
                  Error);
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"h":1,"sigma":[0],"alpha":[0],"root":0,"tree":[5]})")),
                  Error);
}

TEST_CASE("pair json") {
  auto p = big_phi(xi_inv("baAaBA"));
  Json j = pair_to_json(p);
  CHECK(j.dump() == R"({"partition":[[1,4],[2],[3]],"tree":"aAaaAA"})");
  CHECK(pair_from_json(j) == p);
  CdvPair c = lambda("baAaBA");
  CHECK(cdv_pair_from_json(cdv_pair_to_json(c)) == c);
  CHECK_THROWS_AS(pair_from_json(Json::parse(R"({"tree":"aA","partition":[[1,3],[2]]})")), Error);
}

TEST_CASE("dot rendering") {
  TreeRootedMap loop = xi_inv("bB");
  std::string dot = map_to_dot(loop.map);
  CHECK(dot.rfind("digraph map {", 0) == 0);
  CHECK(occurrences(dot, "  v0;") == 1);
  CHECK(occurrences(dot, "  v1;") == 0);
  CHECK(occurrences(dot, "root -> v0") == 1);
  CHECK(occurrences(dot, "v0 -> v0") == 1);
  CHECK(map_to_dot(loop.map) == dot);

  TreeRootedMap mt = xi_inv("baAaBA");
  OrientedMap om = delta(mt);
  std::string full = map_to_dot(mt.map, &mt.in_tree, &om.is_head);
  CHECK(occurrences(full, "style=bold") == 2);
  CHECK(occurrences(full, "dir=forward") == 3);

  std::string bin = binary_tree_to_dot(lambda1("baAaBA"));
  CHECK(occurrences(bin, "shape=circle") == 2);
  CHECK(occurrences(bin, "shape=square") == 3);
  CHECK(occurrences(tree_to_dot(PlaneTree::from_word("aAaaAA")), "->") == 3);
  auto p = NonCrossingPartition::from_parts(4, {{1, 4}, {2}, {3}});
  CHECK(occurrences(ncp_to_dot(p), "constraint=false") == 1);
}
