#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trmap {

using BigInt = boost::multiprecision::cpp_int;

// Shuffle words are plain strings over the ASCII alphabet
//   'a' = a (opening a), 'A' = a-bar, 'b' = b (opening b), 'B' = b-bar.
// Plane trees (parenthesis systems) use only 'a' and 'A'.
inline constexpr char kOpenA = 'a';
inline constexpr char kCloseA = 'A';
inline constexpr char kOpenB = 'b';
inline constexpr char kCloseB = 'B';

enum class WordClass { NotPrefix, Prefix, Complete };

/// Throws Error(InvalidAlphabet) if `w` has a letter outside {a,A,b,B}.
void check_alphabet(std::string_view w);

/// True iff `w` (letters a/A only) is a parenthesis system.
bool is_paren_system(std::string_view w);

WordClass classify(std::string_view w);

inline bool is_prefix_shuffle(std::string_view w) {
  return classify(w) != WordClass::NotPrefix;
}
inline bool is_paren_shuffle(std::string_view w) {
  return classify(w) == WordClass::Complete;
}

/// Throws Error(InvalidShuffle) unless `w` is a complete shuffle.
void require_paren_shuffle(std::string_view w);
/// Throws Error(InvalidShuffle) unless `w` is a prefix-shuffle.
void require_prefix_shuffle(std::string_view w);

std::string subword_a(std::string_view w);
std::string subword_b(std::string_view w);

/// The a-subword closed by as many 'A' as it has unmatched 'a'.
std::string plus_completion(std::string_view w);

/// `w` followed by its unmatched 'a' closers (the tree word of the prefix).
std::string plus_word(std::string_view w);

// Quarter-plane walks: a = North, A = South, b = East, B = West.
enum class Step : char { North = 'N', South = 'S', East = 'E', West = 'W' };
using LatticeWalk = std::vector<Step>;

LatticeWalk to_walk(std::string_view w);
/// Throws Error(InvalidWalk) if the walk leaves x,y >= 0 or is not closed.
std::string from_walk(const LatticeWalk& walk);

std::string walk_to_string(const LatticeWalk& walk);
LatticeWalk walk_from_string(std::string_view s);

/// Calls `fn` for every shuffle of size n in lexicographic order a<A<b<B.
void for_each_paren_shuffle(std::size_t n,
                            const std::function<void(const std::string&)>& fn);
std::vector<std::string> enumerate_paren_shuffles(std::size_t n);

/// Calls `fn` for every prefix-shuffle of exactly `length` letters.
void for_each_prefix_shuffle(std::size_t length,
                             const std::function<void(const std::string&)>& fn);

/// Parenthesis systems of size n (words over a/A), lexicographic.
std::vector<std::string> enumerate_paren_systems(std::size_t n);

BigInt binomial(unsigned n, unsigned k);
BigInt catalan(unsigned n);

/// Sum over k of C(2n,2k) Cat(k) Cat(n-k).
BigInt count_paren_shuffles_sum(unsigned n);
/// Cat(n) Cat(n+1).
BigInt count_paren_shuffles_product(unsigned n);

}  // namespace trmap
