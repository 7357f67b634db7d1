#include <doctest.h>

#include "trmap/cdv.hpp"
#include "trmap/explosion.hpp"
#include "trmap/orientation.hpp"
#include "trmap/prefix.hpp"
#include "trmap/walsh_lehman.hpp"
#include "trmap/words.hpp"

using namespace trmap;

namespace {
std::size_t active_count(const TaggedTree& t, Color c) {
  std::size_t k = 0;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) k += t.color[v] == c && t.order[v] >= 0;
  return k;
}
}  // namespace

TEST_CASE("prefix-map of the empty word") {
  PrefixMap pm = build_prefix_map("");
  CHECK(pm.om.map.half_edge_count() == 1);
  CHECK(pm.dangling.empty());
  CHECK(pm.rooting == std::vector<int>{pm.om.map.root});
}

TEST_CASE("prefix-map with dangling heads and active edges") {
  const std::string w = "babAaBaBAab";
  REQUIRE(is_prefix_shuffle(w));
  PrefixMap pm = build_prefix_map(w);
  CHECK(pm.dangling.size() == 1);
  CHECK(pm.rooting.size() == 3);
  std::size_t active_half_edges = 0;
  for (bool b : pm.active) active_half_edges += b;
  CHECK(active_half_edges == 4);
  PrefixForest f = prefix_forest(pm);
  CHECK(f.dangling_trees.size() + f.rooting_trees.size() == 4);
  CHECK(check_prop_lambda0(w));
  CHECK(check_prop_lambda1(w));
}

TEST_CASE("complete words give the oriented map") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_paren_shuffle(n, [](const std::string& w) {
      PrefixMap pm = build_prefix_map(w);
      OrientedMap om = delta(xi_inv(w));
      REQUIRE(pm.dangling.empty());
      REQUIRE(canonical_form(pm.om) == canonical_form(om));
      PrefixForest f = prefix_forest(pm);
      REQUIRE(f.dangling_trees.empty());
      REQUIRE(f.rooting_trees.size() == 1);
      TreePartitionPair p = phi(om);
      REQUIRE(f.rooting_trees[0] == p.tree);
      TaggedTree pt = partition_tree(w);
      REQUIRE(pt.shape() == upsilon(p.partition));
      REQUIRE(active_count(pt, Color::White) == 1);
      REQUIRE(pt.order[0] == 0);
      REQUIRE(active_count(pt, Color::Black) == 1);
    });
  }
}

TEST_CASE("evolution of prefix-maps") {
  CHECK(evolution_check("", 'a').ok);
  CHECK(evolution_check("b", 'B').ok);
  PrefixMap loop = build_prefix_map("bB");
  CHECK(vertex_count(loop.om.map) == 1);
  CHECK(loop.om.map.edge_count() == 1);
  for (std::size_t len = 0; len <= 7; ++len) {
    for_each_prefix_shuffle(len, [](const std::string& w) {
      for (char alpha : std::string("aAbB")) {
        if (!is_prefix_shuffle(w + alpha)) continue;
        auto r = evolution_check(w, alpha);
        INFO(w << alpha << ": " << r.message);
        REQUIRE(r.ok);
      }
    });
  }
}

TEST_CASE("prefix-forest of the empty word") {
  PrefixForest f = prefix_forest(build_prefix_map(""));
  CHECK(f.dangling_trees.empty());
  REQUIRE(f.rooting_trees.size() == 1);
  CHECK(f.rooting_trees[0] == PlaneTree());
  CHECK(check_prop_lambda0(""));
}

TEST_CASE("prefix-forest proposition") {
  CHECK(check_prop_lambda0("baAaBA"));
  CHECK(prefix_forest(build_prefix_map("baAaBA")).rooting_trees[0].word() == "aAaaAA");
  for (std::size_t len = 0; len <= 8; ++len) {
    for_each_prefix_shuffle(len, [](const std::string& w) {
      INFO(w);
      REQUIRE(check_prop_lambda0(w));
    });
  }
}

TEST_CASE("partition-tree fixtures") {
  CHECK(partition_tree("").serialize() == "(W0(B0))");
  CHECK(theta_lambda1("").serialize() == "(W0(B0))");
  TaggedTree t = partition_tree("baaBbbAa");
  CHECK(t.vertex_count() == 8);
  CHECK(t.serialize() == "(W0(B0(w(b(W1)(W2(B2)))(B1))))");
  CHECK(check_prop_lambda1("baaBbbAa"));
}

TEST_CASE("partition-tree evolution step by step") {
  const std::string w = "baaBbbAaB";
  for (std::size_t k = 5; k < w.size(); ++k) {
    std::string prefix = w.substr(0, k);
    INFO(prefix);
    CHECK(check_prop_lambda1(prefix));
    CHECK(partition_tree_evolution_check(prefix, w[k]).ok);
    CHECK(theta_lambda1_evolution_check(prefix, w[k]).ok);
  }
  CHECK(check_prop_lambda1(w));
}

TEST_CASE("partition-tree proposition and evolutions") {
  for (std::size_t len = 0; len <= 8; ++len) {
    for_each_prefix_shuffle(len, [len](const std::string& w) {
      INFO(w);
      REQUIRE(check_prop_lambda1(w));
      if (len == 8) return;
      for (char alpha : std::string("aAbB")) {
        if (!is_prefix_shuffle(w + alpha)) continue;
        auto p = partition_tree_evolution_check(w, alpha);
        INFO(alpha << ": " << p.message);
        REQUIRE(p.ok);
        auto q = theta_lambda1_evolution_check(w, alpha);
        INFO(alpha << ": " << q.message);
        REQUIRE(q.ok);
      }
    });
  }
}
