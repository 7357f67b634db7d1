#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "trmap/cdv.hpp"
#include "trmap/explosion.hpp"
#include "trmap/planar_map.hpp"

namespace trmap {

using Json = nlohmann::json;

/// {"h": H, "sigma": next, "alpha": pair, "root": id}
Json map_to_json(const RootedMap& m);
/// Adds "tree": sorted half-edges of the spanning tree.
Json map_to_json(const TreeRootedMap& mt);
/// Adds "heads": sorted head half-edges.
Json map_to_json(const OrientedMap& om);

struct ParsedMap {
  RootedMap map;
  std::optional<std::vector<bool>> in_tree;
  std::optional<std::vector<bool>> is_head;
};

/// Throws Error(InvalidFormat) on malformed JSON fields and Error(InvalidMap)
/// when the rotation system is not a rooted planar map.
ParsedMap map_from_json(const Json& j);

/// {"tree": word, "partition": [[1-based elements]...]}
Json pair_to_json(const TreePartitionPair& p);
TreePartitionPair pair_from_json(const Json& j);

/// {"tree": word, "binary": preorder word}
Json cdv_pair_to_json(const CdvPair& p);
CdvPair cdv_pair_from_json(const Json& j);

}  // namespace trmap
