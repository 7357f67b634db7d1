#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>

#include "trmap/error.hpp"
#include "trmap/words.hpp"

using namespace trmap;

TEST_CASE("is_paren_system") {
  CHECK(is_paren_system("aaAaAA"));
  CHECK(is_paren_system(""));
  CHECK_FALSE(is_paren_system("Aa"));
  CHECK_FALSE(is_paren_system("aaA"));
}

TEST_CASE("classify") {
  CHECK(classify("abaBAbaABA") == WordClass::Complete);
  CHECK(classify("ba") == WordClass::Prefix);
  CHECK(classify("B") == WordClass::NotPrefix);
  CHECK(classify("") == WordClass::Complete);
  CHECK_THROWS_AS(check_alphabet("abx"), Error);
}

TEST_CASE("every prefix of a prefix-shuffle is one") {
  for (std::size_t len = 0; len <= 8; ++len) {
    for_each_prefix_shuffle(len, [](const std::string& w) {
      for (std::size_t k = 0; k <= w.size(); ++k) REQUIRE(is_prefix_shuffle(w.substr(0, k)));
    });
  }
}

TEST_CASE("walks") {
  LatticeWalk walk = to_walk("abbAbaaBBAAB");
  REQUIRE(walk.size() == 12);
  CHECK(walk_to_string(walk) == "NEESENNWWSSW");
  CHECK(from_walk(walk) == "abbAbaaBBAAB");
  CHECK(to_walk("").empty());
  CHECK_THROWS_AS(from_walk(walk_from_string("S")), Error);
  CHECK_THROWS_AS(from_walk(walk_from_string("N")), Error);
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_paren_shuffle(n, [](const std::string& w) { REQUIRE(from_walk(to_walk(w)) == w); });
  }
}

TEST_CASE("enumeration order and counts") {
  CHECK(enumerate_paren_shuffles(0) == std::vector<std::string>{""});
  CHECK(enumerate_paren_shuffles(1) == std::vector<std::string>{"aA", "bB"});
  CHECK(enumerate_paren_shuffles(3).size() == 70);
  for (unsigned n = 0; n <= 6; ++n) {
    auto words = enumerate_paren_shuffles(n);
    REQUIRE(std::is_sorted(words.begin(), words.end(), [](const auto& x, const auto& y) {
      auto rank = [](char c) { return std::string_view("aAbB").find(c); };
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                          [&](char p, char q) { return rank(p) < rank(q); });
    }));
    REQUIRE(std::set<std::string>(words.begin(), words.end()).size() == words.size());
    REQUIRE(BigInt(words.size()) == count_paren_shuffles_product(n));
    for (const auto& w : words) {
      REQUIRE(is_paren_system(subword_a(w)));
      std::string b = subword_b(w);
      for (char& c : b) c = c == 'b' ? 'a' : 'A';
      REQUIRE(is_paren_system(b));
    }
  }
}

TEST_CASE("counting formulas") {
  CHECK(count_paren_shuffles_sum(2) == 10);
  CHECK(count_paren_shuffles_sum(0) == 1);
  CHECK(count_paren_shuffles_product(6) == 56628);
  for (unsigned n = 0; n <= 40; ++n) {
    REQUIRE(count_paren_shuffles_sum(n) == count_paren_shuffles_product(n));
  }
  // Cat(40) Cat(41) does not fit in 64 bits.
  CHECK(count_paren_shuffles_product(40) > BigInt(UINT64_MAX));
}

TEST_CASE("subwords and completion") {
  CHECK(subword_a("baAaBA") == "aAaA");
  CHECK(subword_b("baAaBA") == "bB");
  CHECK(plus_completion("ba") == "aA");
  CHECK(plus_completion("") == "");
  CHECK(plus_completion("aabA") == "aaAA");
}
