#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "orient/graph.hpp"
#include "orient/tree_packing.hpp"

namespace orient::cli {

using nlohmann::json;

// [[edge_id, "FWD" | "BWD"], ...] in edge order.
json orientation_to_json(const Orientation& d);

/// Accepts either the bare list or an object with an "orientation" member.
/// Every edge must appear exactly once.
Orientation orientation_from_json(const MultiGraph& g, const json& doc);

json graph_to_json(const MultiGraph& g);

// List of edge-id lists.
std::vector<EdgeSet> edge_sets_from_json(const json& doc);

json read_json_file(const std::string& path);

}  // namespace orient::cli
