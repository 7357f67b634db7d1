#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trmap/catalan.hpp"
#include "trmap/cdv.hpp"
#include "trmap/error.hpp"
#include "trmap/explosion.hpp"
#include "trmap/json_io.hpp"
#include "trmap/orientation.hpp"
#include "trmap/render.hpp"
#include "trmap/verify.hpp"
#include "trmap/walsh_lehman.hpp"
#include "trmap/words.hpp"

using namespace trmap;

namespace {

std::vector<std::string> inputs_or_stdin(const std::vector<std::string>& given) {
  if (!given.empty()) return given;
  std::vector<std::string> lines;
  for (std::string line; std::getline(std::cin, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

Json parse_json(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidFormat, e.what());
  }
}

TreeRootedMap tree_rooted(const ParsedMap& p) {
  if (!p.in_tree) throw Error(ErrorKind::InvalidFormat, "map JSON needs a \"tree\" field");
  TreeRootedMap mt{p.map, *p.in_tree};
  if (!is_spanning_tree(mt.map, mt.in_tree)) {
    throw Error(ErrorKind::InvalidMap, "\"tree\" is not a spanning tree");
  }
  return mt;
}

void run_gen(const std::string& kind, unsigned n) {
  if (kind == "shuffles") {
    for_each_paren_shuffle(n, [](const std::string& w) { std::cout << w << '\n'; });
  } else if (kind == "maps") {
    for (const auto& m : enumerate_maps(n)) std::cout << map_to_json(m).dump() << '\n';
  } else if (kind == "trees") {
    for (const auto& t : enumerate_trees(n)) std::cout << t.word() << '\n';
  } else if (kind == "ncps") {
    for (const auto& p : enumerate_ncps(n)) std::cout << Json(p.parts()).dump() << '\n';
  } else {
    for (const auto& b : enumerate_binary_trees(n)) std::cout << b.serialize() << '\n';
  }
}

std::string convert(const std::string& from, const std::string& to, const std::string& in) {
  const std::string route = from + ">" + to;
  if (route == "shuffle>map") return map_to_json(xi_inv(in)).dump();
  if (route == "map>shuffle") return xi(tree_rooted(map_from_json(parse_json(in))));
  if (route == "map>pair") {
    ParsedMap p = map_from_json(parse_json(in));
    if (p.is_head && !p.in_tree) return pair_to_json(phi(OrientedMap{p.map, *p.is_head})).dump();
    return pair_to_json(big_phi(tree_rooted(p))).dump();
  }
  if (route == "pair>map") return map_to_json(big_phi_inv(pair_from_json(parse_json(in)))).dump();
  if (route == "shuffle>pair") return pair_to_json(big_phi(xi_inv(in))).dump();
  if (route == "shuffle>pair-cdv") return cdv_pair_to_json(lambda(in)).dump();
  if (route == "pair-cdv>shuffle") return lambda_inv(cdv_pair_from_json(parse_json(in)));
  if (route == "shuffle>walk") {
    require_paren_shuffle(in);
    return walk_to_string(to_walk(in));
  }
  if (route == "walk>shuffle") return from_walk(walk_from_string(in));
  if (route == "binarytree>ncp") return Json(big_theta(BinaryTree::parse(in)).parts()).dump();
  throw Error(ErrorKind::InvalidFormat, "no conversion route from " + from + " to " + to);
}

std::string render(const std::string& kind, const std::string& in) {
  if (kind == "map") {
    ParsedMap p = map_from_json(parse_json(in));
    return map_to_dot(p.map, p.in_tree ? &*p.in_tree : nullptr,
                      p.is_head ? &*p.is_head : nullptr);
  }
  if (kind == "tree") return tree_to_dot(PlaneTree::from_word(in));
  if (kind == "binarytree") return binary_tree_to_dot(BinaryTree::parse(in));
  if (kind == "ncp") {
    Json j = parse_json(in);
    auto parts = j.get<std::vector<std::vector<int>>>();
    std::size_t n = 0;
    for (const auto& part : parts) n += part.size();
    return ncp_to_dot(NonCrossingPartition::from_parts(n, parts));
  }
  // A shuffle renders the whole pipeline: its map, phi0, phi1 and lambda1'.
  TreeRootedMap mt = xi_inv(in);
  OrientedMap om = delta(mt);
  TreePartitionPair p = phi(om);
  return map_to_dot(mt.map, &mt.in_tree, &om.is_head) + tree_to_dot(p.tree) +
         ncp_to_dot(p.partition) + binary_tree_to_dot(lambda1_prime(in));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-rooted maps, shuffles of parenthesis systems and their bijections"};
  app.require_subcommand(1);

  std::string gen_kind;
  unsigned gen_n = 0;
  auto* gen = app.add_subcommand("gen", "Enumerate objects of a given size");
  gen->add_option("kind", gen_kind, "What to enumerate")
      ->required()
      ->check(CLI::IsMember({"shuffles", "maps", "trees", "ncps", "binary-trees"}));
  gen->add_option("-n", gen_n, "Size")->required();

  std::string from, to;
  std::vector<std::string> convert_inputs;
  auto* conv = app.add_subcommand("convert", "Apply a bijection; inputs are read from stdin if omitted");
  const std::vector<std::string> formats{"shuffle", "map", "pair", "pair-cdv", "walk", "binarytree", "ncp"};
  conv->add_option("--from", from, "Input format")->required()->check(CLI::IsMember(formats));
  conv->add_option("--to", to, "Output format")->required()->check(CLI::IsMember(formats));
  conv->add_option("input", convert_inputs, "Objects to convert");

  unsigned verify_n = 4;
  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run exhaustive verification suites");
  ver->add_option("-n", verify_n, "Largest size checked")->capture_default_str();
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", suite, "Suite to run")->capture_default_str()->check(CLI::IsMember(suites));

  std::string render_kind, format = "dot";
  std::vector<std::string> render_inputs;
  auto* ren = app.add_subcommand("render", "Emit Graphviz DOT");
  ren->add_option("kind", render_kind, "Object type")
      ->required()
      ->check(CLI::IsMember({"map", "tree", "binarytree", "ncp", "shuffle"}));
  ren->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot"}))->capture_default_str();
  ren->add_option("input", render_inputs, "Objects to render");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      run_gen(gen_kind, gen_n);
    } else if (*conv) {
      for (const auto& in : inputs_or_stdin(convert_inputs)) std::cout << convert(from, to, in) << '\n';
    } else if (*ver) {
      bool ok = true;
      for (const auto& r : run_suites(suite, verify_n)) {
        std::cout << format_report(r) << '\n';
        ok = ok && r.passed;
      }
      return ok ? 0 : 1;
    } else if (*ren) {
      for (const auto& in : inputs_or_stdin(render_inputs)) std::cout << render(render_kind, in);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
