#include "trmap/words.hpp"

#include "trmap/error.hpp"

namespace trmap {

void check_alphabet(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    if (c != kOpenA && c != kCloseA && c != kOpenB && c != kCloseB) {
      throw Error(ErrorKind::InvalidAlphabet,
                  "letter '" + std::string(1, c) + "' at position " +
                      std::to_string(i));
    }
  }
}

bool is_paren_system(std::string_view w) {
  long depth = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == kOpenA) {
      ++depth;
    } else if (w[i] == kCloseA) {
      if (--depth < 0) return false;
    } else {
      throw Error(ErrorKind::InvalidAlphabet,
                  "parenthesis systems use only 'a' and 'A', got '" +
                      std::string(1, w[i]) + "'");
    }
  }
  return depth == 0;
}

WordClass classify(std::string_view w) {
  check_alphabet(w);
  long da = 0, db = 0;
  for (char c : w) {
    switch (c) {
      case kOpenA: ++da; break;
      case kCloseA: --da; break;
      case kOpenB: ++db; break;
      default: --db; break;
    }
    if (da < 0 || db < 0) return WordClass::NotPrefix;
  }
  return (da == 0 && db == 0) ? WordClass::Complete : WordClass::Prefix;
}

void require_paren_shuffle(std::string_view w) {
  if (classify(w) != WordClass::Complete) {
    throw Error(ErrorKind::InvalidShuffle,
                "'" + std::string(w) + "' is not a parenthesis-shuffle");
  }
}

void require_prefix_shuffle(std::string_view w) {
  if (classify(w) == WordClass::NotPrefix) {
    throw Error(ErrorKind::InvalidShuffle,
                "'" + std::string(w) + "' is not a prefix-shuffle");
  }
}

static std::string filter(std::string_view w, char open, char close) {
  std::string out;
  for (char c : w) {
    if (c == open || c == close) out.push_back(c);
  }
  return out;
}

std::string subword_a(std::string_view w) { return filter(w, kOpenA, kCloseA); }
std::string subword_b(std::string_view w) { return filter(w, kOpenB, kCloseB); }

static std::size_t unmatched_a(std::string_view w) {
  std::size_t open = 0;
  for (char c : w) {
    if (c == kOpenA) ++open;
    if (c == kCloseA) --open;
  }
  return open;
}

std::string plus_completion(std::string_view w) {
  require_prefix_shuffle(w);
  std::string out = subword_a(w);
  out.append(unmatched_a(w), kCloseA);
  return out;
}

std::string plus_word(std::string_view w) {
  require_prefix_shuffle(w);
  std::string out(w);
  out.append(unmatched_a(w), kCloseA);
  return out;
}

LatticeWalk to_walk(std::string_view w) {
  require_paren_shuffle(w);
  LatticeWalk walk;
  walk.reserve(w.size());
  for (char c : w) {
    switch (c) {
      case kOpenA: walk.push_back(Step::North); break;
      case kCloseA: walk.push_back(Step::South); break;
      case kOpenB: walk.push_back(Step::East); break;
      default: walk.push_back(Step::West); break;
    }
  }
  return walk;
}

std::string from_walk(const LatticeWalk& walk) {
  std::string w;
  w.reserve(walk.size());
  long x = 0, y = 0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    switch (walk[i]) {
      case Step::North: ++y; w.push_back(kOpenA); break;
      case Step::South: --y; w.push_back(kCloseA); break;
      case Step::East: ++x; w.push_back(kOpenB); break;
      case Step::West: --x; w.push_back(kCloseB); break;
    }
    if (x < 0 || y < 0) {
      throw Error(ErrorKind::InvalidWalk,
                  "walk leaves the quadrant at step " + std::to_string(i));
    }
  }
  if (x != 0 || y != 0) {
    throw Error(ErrorKind::InvalidWalk, "walk does not return to the origin");
  }
  return w;
}

std::string walk_to_string(const LatticeWalk& walk) {
  std::string s;
  for (Step st : walk) s.push_back(static_cast<char>(st));
  return s;
}

LatticeWalk walk_from_string(std::string_view s) {
  LatticeWalk walk;
  for (char c : s) {
    switch (c) {
      case 'N': walk.push_back(Step::North); break;
      case 'S': walk.push_back(Step::South); break;
      case 'E': walk.push_back(Step::East); break;
      case 'W': walk.push_back(Step::West); break;
      default:
        throw Error(ErrorKind::InvalidWalk,
                    "unknown step '" + std::string(1, c) + "'");
    }
  }
  return walk;
}

namespace {

// Backtracking over a<A<b<B. A partial word can be completed iff its
// unmatched openers fit in the remaining length (parity is automatic).
void extend(std::string& w, std::size_t length, long da, long db,
            const std::function<void(const std::string&)>& fn) {
  std::size_t remaining = length - w.size();
  if (remaining == 0) {
    fn(w);
    return;
  }
  const auto fits = [&](long na, long nb) {
    return static_cast<std::size_t>(na + nb) <= remaining - 1;
  };
  if (fits(da + 1, db)) {
    w.push_back(kOpenA);
    extend(w, length, da + 1, db, fn);
    w.pop_back();
  }
  if (da > 0) {
    w.push_back(kCloseA);
    extend(w, length, da - 1, db, fn);
    w.pop_back();
  }
  if (fits(da, db + 1)) {
    w.push_back(kOpenB);
    extend(w, length, da, db + 1, fn);
    w.pop_back();
  }
  if (db > 0) {
    w.push_back(kCloseB);
    extend(w, length, da, db - 1, fn);
    w.pop_back();
  }
}

void extend_prefix(std::string& w, std::size_t length, long da, long db,
                   const std::function<void(const std::string&)>& fn) {
  if (w.size() == length) {
    fn(w);
    return;
  }
  w.push_back(kOpenA);
  extend_prefix(w, length, da + 1, db, fn);
  w.pop_back();
  if (da > 0) {
    w.push_back(kCloseA);
    extend_prefix(w, length, da - 1, db, fn);
    w.pop_back();
  }
  w.push_back(kOpenB);
  extend_prefix(w, length, da, db + 1, fn);
  w.pop_back();
  if (db > 0) {
    w.push_back(kCloseB);
    extend_prefix(w, length, da, db - 1, fn);
    w.pop_back();
  }
}

void extend_system(std::string& w, std::size_t length, long depth,
                   std::vector<std::string>& out) {
  std::size_t remaining = length - w.size();
  if (remaining == 0) {
    out.push_back(w);
    return;
  }
  if (static_cast<std::size_t>(depth + 1) <= remaining - 1) {
    w.push_back(kOpenA);
    extend_system(w, length, depth + 1, out);
    w.pop_back();
  }
  if (depth > 0) {
    w.push_back(kCloseA);
    extend_system(w, length, depth - 1, out);
    w.pop_back();
  }
}

}  // namespace

void for_each_paren_shuffle(std::size_t n,
                            const std::function<void(const std::string&)>& fn) {
  std::string w;
  w.reserve(2 * n);
  extend(w, 2 * n, 0, 0, fn);
}

std::vector<std::string> enumerate_paren_shuffles(std::size_t n) {
  std::vector<std::string> out;
  for_each_paren_shuffle(n, [&](const std::string& w) { out.push_back(w); });
  return out;
}

void for_each_prefix_shuffle(std::size_t length,
                             const std::function<void(const std::string&)>& fn) {
  std::string w;
  w.reserve(length);
  extend_prefix(w, length, 0, 0, fn);
}

std::vector<std::string> enumerate_paren_systems(std::size_t n) {
  std::vector<std::string> out;
  std::string w;
  extend_system(w, 2 * n, 0, out);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigInt count_paren_shuffles_sum(unsigned n) {
  BigInt total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    total += binomial(2 * n, 2 * k) * catalan(k) * catalan(n - k);
  }
  return total;
}

BigInt count_paren_shuffles_product(unsigned n) {
  return catalan(n) * catalan(n + 1);
}

}  // namespace trmap
