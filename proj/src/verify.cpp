#include "trmap/verify.hpp"

#include <algorithm>
#include <set>

#include "trmap/error.hpp"
#include "trmap/orientation.hpp"
#include "trmap/prefix.hpp"
#include "trmap/walsh_lehman.hpp"
#include "trmap/words.hpp"

namespace trmap {

Bijections Bijections::library() {
  Bijections f;
  f.xi = [](const TreeRootedMap& mt) { return trmap::xi(mt); };
  f.xi_inv = [](std::string_view w) { return trmap::xi_inv(w); };
  f.delta = [](const TreeRootedMap& mt) { return trmap::delta(mt); };
  f.gamma = [](const OrientedMap& om) { return trmap::gamma(om); };
  f.phi = [](const OrientedMap& om) { return trmap::phi(om); };
  f.psi = [](const PlaneTree& t, const NonCrossingPartition& p) { return trmap::psi(t, p); };
  f.lambda = [](std::string_view w) { return trmap::lambda(w); };
  f.lambda_inv = [](const CdvPair& p) { return trmap::lambda_inv(p); };
  return f;
}

namespace {

/// Counts checks and keeps the first failure.
class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}

  void expect(bool ok, const std::string& input, const std::string& what) {
    ++r_.checked;
    if (ok || !r_.passed) return;
    r_.passed = false;
    r_.counterexample = input;
    r_.detail = what;
  }

  /// Runs `body`, turning an exception into a failure on `input`.
  template <class F>
  void guard(const std::string& input, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, input, std::string("threw ") + e.what());
    }
  }

  bool failed() const { return !r_.passed; }

 private:
  SuiteReport& r_;
};

std::string describe(const TreeRootedMap& mt) {
  try {
    return "tree-rooted map with word " + trmap::xi(mt);
  } catch (const std::exception&) {
    return "tree-rooted map";
  }
}

std::string describe(const TreePartitionPair& p) {
  return "(" + p.tree.word() + ", " + p.partition.to_string() + ")";
}

std::string describe(const CdvPair& p) {
  return "(" + p.tree.word() + ", " + p.binary.serialize() + ")";
}

void suite_counts(Recorder& rec, SuiteReport& r, unsigned n) {
  for (unsigned k = 0; k <= n; ++k) {
    std::uint64_t count = 0;
    for_each_paren_shuffle(k, [&](const std::string&) { ++count; });
    BigInt expected = catalan(k) * catalan(k + 1);
    std::string label = "n=" + std::to_string(k);
    rec.expect(BigInt(count) == expected, label,
               "enumerated " + std::to_string(count) + ", expected " + expected.str());
    rec.expect(count_paren_shuffles_sum(k) == expected, label, "binomial-sum identity fails");
    rec.expect(count_paren_shuffles_product(k) == expected, label, "product identity fails");
    r.detail += (k ? " " : "") + std::to_string(count);
  }
}

void suite_xi(Recorder& rec, unsigned n, const Bijections& f) {
  for (unsigned k = 0; k <= n; ++k) {
    for_each_paren_shuffle(k, [&](const std::string& w) {
      rec.guard(w, [&] {
        TreeRootedMap mt = f.xi_inv(w);
        rec.expect(validate(mt.map).ok && is_spanning_tree(mt.map, mt.in_tree), w,
                   "xi_inv does not build a tree-rooted map");
        rec.expect(f.xi(mt) == w, w, "xi(xi_inv(w)) != w");
      });
    });
  }
  for (unsigned k = 0; k <= std::min(n, 4u); ++k) {
    for (const RootedMap& m : enumerate_maps(k)) {
      for (auto& tree : spanning_trees(m)) {
        TreeRootedMap mt{m, std::move(tree)};
        rec.guard(describe(mt), [&] {
          TreeRootedMap back = f.xi_inv(f.xi(mt));
          rec.expect(canonical_form(back) == canonical_form(mt), describe(mt),
                     "xi_inv(xi(M)) != M");
        });
      }
    }
  }
}

void suite_orientation(Recorder& rec, unsigned n, const Bijections& f) {
  for (unsigned k = 0; k <= n; ++k) {
    for_each_paren_shuffle(k, [&](const std::string& w) {
      rec.guard(w, [&] {
        TreeRootedMap mt = trmap::xi_inv(w);
        OrientedMap om = f.delta(mt);
        rec.expect(is_tree_orientation(om), w, "delta is not a tree-orientation");
        rec.expect(f.gamma(om).in_tree == mt.in_tree, w, "gamma(delta(M)) != M");
      });
    });
  }
  for (unsigned k = 0; k <= std::min(n, 3u); ++k) {
    for (const RootedMap& m : enumerate_maps(k)) {
      for (const OrientedMap& om : all_orientations(m)) {
        std::string label = "orientation of a map with " + std::to_string(k) + " edges";
        rec.guard(label, [&] {
          bool tree_oriented = is_tree_orientation(om);
          rec.expect(tree_oriented == is_delta_image(om), label,
                     "tree-orientation test disagrees with the spanning-tree oracle");
          if (tree_oriented) {
            rec.expect(f.delta(f.gamma(om)) == om, label, "delta(gamma(O)) != O");
          }
        });
      }
    }
  }
}

void suite_explosion(Recorder& rec, unsigned n, const Bijections& f) {
  for (unsigned k = 0; k <= n; ++k) {
    for_each_paren_shuffle(k, [&](const std::string& w) {
      rec.guard(w, [&] {
        OrientedMap om = trmap::delta(trmap::xi_inv(w));
        TreePartitionPair p = f.phi(om);
        rec.expect(canonical_form(f.psi(p.tree, p.partition)) == canonical_form(om), w,
                   "psi(phi(O)) != O");
      });
    });
    auto trees = enumerate_trees(k);
    auto ncps = enumerate_ncps(k + 1);
    for (const auto& t : trees) {
      for (const auto& p : ncps) {
        TreePartitionPair pair{t, p};
        rec.guard(describe(pair), [&] {
          rec.expect(f.phi(f.psi(t, p)) == pair, describe(pair), "phi(psi(T, P)) != (T, P)");
        });
      }
    }
  }
  for (unsigned k = 0; k <= std::min(n, 4u); ++k) {
    std::set<std::pair<std::string, std::string>> images;
    std::string label = "big_phi image at n=" + std::to_string(k);
    rec.guard(label, [&] {
      for_each_paren_shuffle(k, [&](const std::string& w) {
        TreePartitionPair p = f.phi(f.delta(trmap::xi_inv(w)));
        images.insert({p.tree.word(), p.partition.to_string()});
      });
      rec.expect(BigInt(images.size()) == catalan(k) * catalan(k + 1), label,
                 "image has " + std::to_string(images.size()) + " pairs");
    });
  }
}

void suite_cdv(Recorder& rec, unsigned n, const Bijections& f) {
  for (unsigned s1 = 0; s1 <= 3; ++s1) {
    for (unsigned s2 = 0; s2 + s1 <= 3; ++s2) {
      for (const auto& t1 : enumerate_trees(s1)) {
        for (const auto& t2 : enumerate_trees(s2)) {
          std::string label = "sigma(" + t1.word() + ", " + t2.word() + ")";
          PlaneTree t = sigma(t1, t2);
          rec.expect(t.size() == s1 + s2 + 1, label, "size law fails");
          rec.expect(sigma_inv(t) == std::make_pair(t1, t2), label, "sigma_inv(sigma) != id");
        }
      }
    }
  }
  for (std::size_t len = 0; len <= std::min<std::size_t>(2 * n, 8); ++len) {
    for_each_prefix_shuffle(len, [&](const std::string& w) {
      rec.guard(w, [&] {
        auto count = [&](char c) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), c)); };
        TreeSequence s = lambda0(w);
        BinaryTree b = lambda1(w);
        std::size_t edges = 0;
        for (const auto& t : s.trees) edges += t.size();
        rec.expect(s.count('v') == count(kOpenA) - count(kCloseA) + 1 &&
                       s.count('u') == count(kOpenB) - count(kCloseB) + 1,
                   w, "letter counts of lambda0 are wrong");
        rec.expect(edges == count(kCloseA) + count(kCloseB), w, "lambda0 edge count is wrong");
        rec.expect(b.size() == count(kOpenA) + count(kOpenB) + 1, w,
                   "lambda1 node count is wrong");
        rec.expect(is_compatible(s, b), w, "lambda0 and lambda1 are not compatible");
      });
    });
  }
  for (unsigned k = 0; k <= n; ++k) {
    std::set<std::string> images;
    for_each_paren_shuffle(k, [&](const std::string& w) {
      rec.guard(w, [&] {
        CdvPair p = f.lambda(w);
        images.insert(p.tree.word() + "|" + p.binary.serialize());
        rec.expect(f.lambda_inv(p) == w, w, "lambda_inv(lambda(w)) != w");
      });
    });
    rec.expect(BigInt(images.size()) == catalan(k) * catalan(k + 1),
               "lambda image at n=" + std::to_string(k),
               "image has " + std::to_string(images.size()) + " pairs");
  }
  for (unsigned k = 0; k <= std::min(n, 4u); ++k) {
    for (const auto& t : enumerate_trees(k)) {
      for (const auto& b : enumerate_binary_trees(k + 1)) {
        CdvPair p{t, b};
        rec.guard(describe(p), [&] {
          rec.expect(f.lambda(f.lambda_inv(p)) == p, describe(p), "lambda(lambda_inv(p)) != p");
        });
      }
    }
  }
}

void suite_isomorphism(Recorder& rec, unsigned n, const Bijections& f) {
  for (unsigned k = 0; k <= n; ++k) {
    for_each_paren_shuffle(k, [&](const std::string& w) {
      rec.guard(w, [&] {
        TreePartitionPair p = f.phi(f.delta(f.xi_inv(w)));
        CdvPair c = f.lambda(w);
        rec.expect(p.tree == c.tree, w,
                   "phi0 = " + p.tree.word() + " but lambda0' = " + c.tree.word());
        NonCrossingPartition q = big_theta(c.binary);
        rec.expect(p.partition == q, w,
                   "phi1 = " + p.partition.to_string() + " but Theta(lambda1') = " + q.to_string());
      });
    });
  }
}

void suite_prefix(Recorder& rec, unsigned n) {
  const std::size_t max_len = 2 * static_cast<std::size_t>(n);
  for (std::size_t len = 0; len <= max_len; ++len) {
    for_each_prefix_shuffle(len, [&](const std::string& w) {
      rec.guard(w, [&] {
        rec.expect(check_prop_lambda0(w), w, "prefix-forest does not match lambda0");
        rec.expect(check_prop_lambda1(w), w, "partition-tree does not match theta(lambda1)");
        if (len < max_len) {
          for (char a : {kOpenA, kCloseA, kOpenB, kCloseB}) {
            std::string wa = w + a;
            if (!is_prefix_shuffle(wa)) continue;
            for (const EvolutionReport& e :
                 {evolution_check(w, a), partition_tree_evolution_check(w, a),
                  theta_lambda1_evolution_check(w, a)}) {
              rec.expect(e.ok, wa, e.message);
            }
          }
        }
        if (is_paren_shuffle(w)) {
          OrientedMap om = trmap::delta(trmap::xi_inv(w));
          PrefixMap pm = build_prefix_map(w);
          rec.expect(canonical_form(pm.om) == canonical_form(om), w,
                     "prefix-map of a complete word is not delta(xi_inv(w))");
          TaggedTree t = partition_tree(w);
          rec.expect(t.shape() == upsilon(phi(om).partition), w,
                     "partition-tree is not Upsilon(phi1)");
          std::size_t white = 0;
          std::size_t black = 0;
          for (std::size_t v = 0; v < t.vertex_count(); ++v) {
            if (t.order[v] < 0) continue;
            (t.color[v] == Color::White ? white : black)++;
          }
          rec.expect(white == 1 && black == 1 && t.order[0] == 0, w,
                     "complete word: expected exactly v0 and the root-vertex active");
        }
      });
    });
  }
}

}  // namespace

SuiteReport run_suite(std::string_view name, unsigned n, const Bijections& f) {
  SuiteReport r;
  r.name = std::string(name);
  Recorder rec(r);
  if (name == "counts") {
    suite_counts(rec, r, n);
  } else if (name == "xi") {
    suite_xi(rec, n, f);
  } else if (name == "orientation") {
    suite_orientation(rec, n, f);
  } else if (name == "explosion") {
    suite_explosion(rec, n, f);
  } else if (name == "cdv") {
    suite_cdv(rec, n, f);
  } else if (name == "isomorphism") {
    suite_isomorphism(rec, n, f);
  } else if (name == "prefix") {
    suite_prefix(rec, n);
  } else {
    throw Error(ErrorKind::InvalidFormat, "unknown suite '" + std::string(name) + "'");
  }
  return r;
}

std::vector<SuiteReport> run_suites(std::string_view name, unsigned n, const Bijections& f) {
  if (name != "all") return {run_suite(name, n, f)};
  std::vector<SuiteReport> out;
  for (const auto& s : suite_names()) out.push_back(run_suite(s, n, f));
  return out;
}

std::string format_report(const SuiteReport& r) {
  std::string s = (r.passed ? "PASS " : "FAIL ") + r.name + " (" +
                  std::to_string(r.checked) + " checks)";
  if (!r.passed) {
    s += ": counterexample '" + r.counterexample + "': " + r.detail;
  } else if (!r.detail.empty()) {
    s += ": " + r.detail;
  }
  return s;
}

}  // namespace trmap
