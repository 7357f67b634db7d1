#include "trmap/json_io.hpp"

#include "trmap/error.hpp"

namespace trmap {

namespace {

std::vector<int> flagged(const std::vector<bool>& flags) {
  std::vector<int> out;
  for (std::size_t h = 0; h < flags.size(); ++h) {
    if (flags[h]) out.push_back(static_cast<int>(h));
  }
  return out;
}

std::vector<bool> flags_from(const Json& j, std::size_t h, const char* field) {
  std::vector<bool> out(h, false);
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long>() < 0 || x.get<std::size_t>() >= h) {
      throw Error(ErrorKind::InvalidFormat, std::string("bad half-edge in \"") + field + "\"");
    }
    out[x.get<std::size_t>()] = true;
  }
  return out;
}

template <class F>
auto parse_field(F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidFormat, e.what());
  }
}

}  // namespace

Json map_to_json(const RootedMap& m) {
  return Json{{"h", m.half_edge_count()}, {"sigma", m.next}, {"alpha", m.pair}, {"root", m.root}};
}

Json map_to_json(const TreeRootedMap& mt) {
  Json j = map_to_json(mt.map);
  j["tree"] = flagged(mt.in_tree);
  return j;
}

Json map_to_json(const OrientedMap& om) {
  Json j = map_to_json(om.map);
  j["heads"] = flagged(om.is_head);
  return j;
}

ParsedMap map_from_json(const Json& j) {
  ParsedMap out = parse_field([&] {
    ParsedMap p;
    auto h = j.at("h").get<std::size_t>();
    p.map.next = j.at("sigma").get<std::vector<int>>();
    p.map.pair = j.at("alpha").get<std::vector<int>>();
    p.map.root = j.at("root").get<int>();
    if (p.map.next.size() != h || p.map.pair.size() != h) {
      throw Error(ErrorKind::InvalidFormat, "\"sigma\" and \"alpha\" must have h entries");
    }
    if (j.contains("tree")) p.in_tree = flags_from(j.at("tree"), h, "tree");
    if (j.contains("heads")) p.is_head = flags_from(j.at("heads"), h, "heads");
    return p;
  });
  require_valid(out.map);
  return out;
}

Json pair_to_json(const TreePartitionPair& p) {
  return Json{{"tree", p.tree.word()}, {"partition", p.partition.parts()}};
}

TreePartitionPair pair_from_json(const Json& j) {
  return parse_field([&] {
    auto tree = PlaneTree::from_word(j.at("tree").get<std::string>());
    auto parts = j.at("partition").get<std::vector<std::vector<int>>>();
    std::size_t n = 0;
    for (const auto& part : parts) n += part.size();
    if (n != tree.vertex_count()) {
      throw Error(ErrorKind::SizeMismatch, "the partition must cover one element per tree vertex");
    }
    return TreePartitionPair{tree, NonCrossingPartition::from_parts(n, parts)};
  });
}

Json cdv_pair_to_json(const CdvPair& p) {
  return Json{{"tree", p.tree.word()}, {"binary", p.binary.serialize()}};
}

CdvPair cdv_pair_from_json(const Json& j) {
  return parse_field([&] {
    return CdvPair{PlaneTree::from_word(j.at("tree").get<std::string>()),
                   BinaryTree::parse(j.at("binary").get<std::string>())};
  });
}

}  // namespace trmap
