#include "orient_cli/json_io.hpp"

#include "orient/error.hpp"
#include "orient/io.hpp"

namespace orient::cli {

json orientation_to_json(const Orientation& d) {
  json out = json::array();
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    out.push_back({e, d.direction(e) == Direction::kForward ? "FWD" : "BWD"});
  }
  return out;
}

Orientation orientation_from_json(const MultiGraph& g, const json& doc) {
  const json& list = doc.is_object() ? doc.at("orientation") : doc;
  if (!list.is_array()) throw Error(ErrorCode::kInvalidInput, "orientation must be a list");
  std::vector<Direction> dirs(g.edge_count(), Direction::kForward);
  std::vector<char> seen(g.edge_count(), 0);
  for (const json& item : list) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_string()) {
      throw Error(ErrorCode::kInvalidInput, "orientation entries are [edge, \"FWD\"|\"BWD\"]");
    }
    const auto e = item[0].get<std::int64_t>();
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorCode::kInvalidInput, "orientation names edge " + std::to_string(e) +
                                                " outside the graph");
    }
    if (seen[e]++) throw Error(ErrorCode::kInvalidInput, "edge " + std::to_string(e) + " twice");
    const auto dir = item[1].get<std::string>();
    if (dir == "FWD") {
      dirs[e] = Direction::kForward;
    } else if (dir == "BWD") {
      dirs[e] = Direction::kBackward;
    } else {
      throw Error(ErrorCode::kInvalidInput, "direction must be FWD or BWD, got " + dir);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!seen[e]) throw Error(ErrorCode::kInvalidInput, "edge " + std::to_string(e) + " missing");
  }
  return Orientation(g, std::move(dirs));
}

json graph_to_json(const MultiGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"V", g.vertex_count()}, {"E", edges}};
}

std::vector<EdgeSet> edge_sets_from_json(const json& doc) {
  if (!doc.is_array()) throw Error(ErrorCode::kInvalidInput, "expected a list of edge lists");
  std::vector<EdgeSet> out;
  for (const json& set : doc) {
    if (!set.is_array()) throw Error(ErrorCode::kInvalidInput, "expected a list of edge ids");
    EdgeSet edges;
    for (const json& e : set) {
      if (!e.is_number_integer()) throw Error(ErrorCode::kInvalidInput, "edge ids are integers");
      edges.push_back(e.get<EdgeId>());
    }
    out.push_back(std::move(edges));
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in = open_input(path);
  try {
    return json::parse(in);
  } catch (const json::exception& err) {
    throw Error(ErrorCode::kInvalidInput, path + ": " + err.what());
  }
}

}  // namespace orient::cli
