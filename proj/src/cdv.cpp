#include "trmap/cdv.hpp"

#include <algorithm>

#include "trmap/error.hpp"
#include "trmap/words.hpp"

namespace trmap {

namespace {

constexpr char kU = 'u';
constexpr char kV = 'v';

std::vector<int> active_leaves(const BinaryTree& b) {
  std::vector<int> out;
  for (int l : b.leaves()) {
    if (b.vertex(l).active) out.push_back(l);
  }
  return out;
}

int last_active_left(const BinaryTree& b) {
  int found = -1;
  for (int l : active_leaves(b)) {
    if (b.vertex(l).side != Side::Right) found = l;
  }
  return found;
}

int first_active_right(const BinaryTree& b) {
  for (int l : active_leaves(b)) {
    if (b.vertex(l).side == Side::Right) return l;
  }
  return -1;
}

[[noreturn]] void invalid_pair(const std::string& why) {
  throw Error(ErrorKind::InvalidPair, why);
}

}  // namespace

// ------------------------------------------------------------ TreeSequence

std::size_t TreeSequence::count(char letter) const {
  return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), letter));
}

std::size_t TreeSequence::last_u() const {
  std::size_t i = 0;
  while (i + 1 < letters.size() && letters[i + 1] == kU) ++i;
  return i;
}

std::string TreeSequence::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    s.push_back(letters[i]);
    if (i < trees.size()) s += "[" + trees[i].word() + "]";
  }
  return s;
}

TreeSequence TreeSequence::parse(std::string_view s) {
  TreeSequence out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorKind::InvalidFormat, "tree-sequence: " + why);
  };
  while (pos < s.size()) {
    char c = s[pos++];
    if (c != kU && c != kV) fail("expected 'u' or 'v'");
    out.letters.push_back(c);
    if (pos == s.size()) break;
    if (s[pos] != '[') fail("expected '['");
    std::size_t close = s.find(']', pos);
    if (close == std::string_view::npos) fail("missing ']'");
    try {
      out.trees.push_back(PlaneTree::from_word(s.substr(pos + 1, close - pos - 1)));
    } catch (const Error& e) {
      fail(e.what());
    }
    pos = close + 1;
  }
  if (out.letters.size() < 2 || out.trees.size() + 1 != out.letters.size() ||
      out.letters.front() != kU || out.letters.back() != kV) {
    fail("must read u t ... t v");
  }
  if (!std::is_sorted(out.letters.begin(), out.letters.end())) {
    fail("every u must precede every v");
  }
  return out;
}

// ------------------------------------------------------------------- sigma

PlaneTree sigma(const PlaneTree& t1, const PlaneTree& t2) {
  std::string w = t2.word();
  w.push_back(kOpenA);
  w += t1.word();
  w.push_back(kCloseA);
  return PlaneTree::from_word(w);
}

std::pair<PlaneTree, PlaneTree> sigma_inv(const PlaneTree& t) {
  const std::string& w = t.word();
  if (w.empty()) {
    throw Error(ErrorKind::InvalidTree, "the size-0 tree has no preimage by sigma");
  }
  // Start of the last subtree of the root-vertex.
  std::size_t start = w.size() - 1;
  int depth = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    depth += w[i] == kCloseA ? 1 : -1;
    if (depth == 0) {
      start = i;
      break;
    }
  }
  return {PlaneTree::from_word(w.substr(start + 1, w.size() - start - 2)),
          PlaneTree::from_word(w.substr(0, start))};
}

// ----------------------------------------------------------------- lambda0

TreeSequence lambda0(std::string_view w) {
  require_prefix_shuffle(w);
  TreeSequence s{{kU, kV}, {PlaneTree()}};
  for (char c : w) {
    std::size_t i = s.last_u();  // first v is at i + 1
    switch (c) {
      case kOpenA:
        s.letters.insert(s.letters.begin() + i + 1, kV);
        s.trees.insert(s.trees.begin() + i, PlaneTree());
        break;
      case kOpenB:
        s.letters.insert(s.letters.begin() + i + 1, kU);
        s.trees.insert(s.trees.begin() + i + 1, PlaneTree());
        break;
      default: {
        // Merge the trees on both sides of the first v or of the last u.
        std::size_t j = c == kCloseA ? i + 1 : i;
        s.trees[j - 1] = sigma(s.trees[j - 1], s.trees[j]);
        s.trees.erase(s.trees.begin() + j);
        s.letters.erase(s.letters.begin() + j);
        break;
      }
    }
  }
  return s;
}

PlaneTree lambda0_prime(std::string_view w) {
  TreeSequence s = lambda0(w);
  if (s.letters.size() != 2) {
    throw Error(ErrorKind::IncompleteWord,
                "'" + std::string(w) + "' is not a parenthesis-shuffle");
  }
  return s.trees.front();
}

// ----------------------------------------------------------------- lambda1

BinaryTree lambda1(std::string_view w) {
  require_prefix_shuffle(w);
  BinaryTree b = BinaryTree::b1();
  for (char c : w) {
    switch (c) {
      case kOpenA: b.graft_b1(last_active_left(b)); break;
      case kOpenB: b.graft_b1(first_active_right(b)); break;
      case kCloseA: b.set_active(first_active_right(b), false); break;
      default: b.set_active(last_active_left(b), false); break;
    }
  }
  return b;
}

BinaryTree lambda1_prime(std::string_view w) {
  if (classify(w) != WordClass::Complete) {
    throw Error(ErrorKind::IncompleteWord,
                "'" + std::string(w) + "' is not a parenthesis-shuffle");
  }
  BinaryTree b = lambda1(w);
  b.deactivate_all();
  return b;
}

CdvPair lambda(std::string_view w) { return {lambda0_prime(w), lambda1_prime(w)}; }

// -------------------------------------------------------------- inversion

bool is_compatible(const TreeSequence& s, const BinaryTree& b) {
  auto leaves = b.leaves();
  if (!b.vertex(leaves.front()).active || !b.vertex(leaves.back()).active) {
    return false;
  }
  std::vector<char> sides;
  std::vector<std::size_t> gaps;
  std::size_t inactive = 0;
  for (int l : leaves) {
    const auto& x = b.vertex(l);
    if (!x.active) {
      ++inactive;
      continue;
    }
    if (!sides.empty()) gaps.push_back(inactive);
    inactive = 0;
    sides.push_back(x.side == Side::Right ? kV : kU);
  }
  if (sides != s.letters) return false;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] != s.trees[i].size()) return false;
  }
  return true;
}

std::string lambda_inv(const CdvPair& p) {
  if (p.binary.size() != p.tree.size() + 1) {
    throw Error(ErrorKind::SizeMismatch,
                "binary tree must have " + std::to_string(p.tree.size() + 1) +
                    " nodes, got " + std::to_string(p.binary.size()));
  }
  TreeSequence s{{kU, kV}, {p.tree}};
  BinaryTree b = p.binary;
  auto leaves = b.leaves();
  b.deactivate_all();
  b.set_active(leaves.front(), true);
  b.set_active(leaves.back(), true);

  std::string reversed;
  while (true) {
    if (!is_compatible(s, b)) invalid_pair("tree-sequence and binary tree disagree");
    if (b.size() == 1 && s.trees.size() == 1 && s.trees[0].size() == 0) break;

    std::size_t i = s.last_u();
    const PlaneTree& t = s.trees[i];
    int left = last_active_left(b);
    int right = first_active_right(b);
    if (t.size() == 0) {
      // Last letter a or b: the two active leaves around the gap are siblings.
      const auto& l = b.vertex(left);
      if (l.parent < 0 || l.parent != b.vertex(right).parent) {
        invalid_pair("active leaves around an empty gap are not siblings");
      }
      int father = l.parent;
      bool father_right = b.vertex(father).side == Side::Right;
      b.prune_leaves(father, true);
      s.trees.erase(s.trees.begin() + i);
      if (father_right) {
        s.letters.erase(s.letters.begin() + i);  // u tau v -> v
        reversed.push_back(kOpenB);
      } else {
        s.letters.erase(s.letters.begin() + i + 1);  // u tau v -> u
        reversed.push_back(kOpenA);
      }
    } else {
      auto [t1, t2] = sigma_inv(t);
      auto all = b.leaves();
      auto at = std::find(all.begin(), all.end(), left);
      std::size_t target = static_cast<std::size_t>(at - all.begin()) + t1.size() + 1;
      if (target >= all.size()) invalid_pair("reactivated leaf out of range");
      int leaf = all[target];
      bool is_right = b.vertex(leaf).side == Side::Right;
      b.set_active(leaf, true);
      s.trees[i] = t1;
      s.trees.insert(s.trees.begin() + i + 1, t2);
      s.letters.insert(s.letters.begin() + i + 1, is_right ? kV : kU);
      reversed.push_back(is_right ? kCloseA : kCloseB);
    }
  }
  std::string w(reversed.rbegin(), reversed.rend());
  if (classify(w) != WordClass::Complete || !(lambda(w) == p)) {
    invalid_pair("peeled word does not reproduce the pair");
  }
  return w;
}

}  // namespace trmap
