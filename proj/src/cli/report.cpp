#include <sstream>

#include "lved/cli.hpp"

namespace lved::cli {

using nlohmann::json;

json to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, witness::EdgeDeficit>) {
          return {{"kind", "edge"}, {"edge", x.edge}, {"achieved", x.achieved}, {"required", x.required}};
        } else if constexpr (std::is_same_v<T, witness::EdgePairDeficit>) {
          return {{"kind", "edge_pair"},
                  {"edges", {x.first, x.second}},
                  {"achieved", x.achieved},
                  {"required", x.required}};
        } else if constexpr (std::is_same_v<T, witness::VertexDeficit>) {
          return {{"kind", "vertex"}, {"vertex", x.vertex}, {"achieved", x.achieved}, {"required", x.required}};
        } else if constexpr (std::is_same_v<T, witness::VertexPairDeficit>) {
          return {{"kind", "vertex_pair"},
                  {"vertices", {x.first, x.second}},
                  {"achieved", x.achieved},
                  {"required", x.required}};
        } else if constexpr (std::is_same_v<T, witness::UncoveredEdge>) {
          return {{"kind", "uncovered_edge"}, {"edge", x.edge}};
        } else {
          return {{"kind", "missing_required"}, {"vertex", x.vertex}};
        }
      },
      w);
}

json to_json(const Verdict& v) {
  return {{"ok", v.ok}, {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}};
}

json to_json(const ReductionMap& map) {
  json j = {{"kind", to_string(map.kind)}, {"original_n", map.original_n}, {"original_m", map.original_m}};
  if (map.kind == ReductionKind::kVcGadget) {
    json paths = json::array();
    for (const PathGadget& p : map.paths) paths.push_back({p.x, p.y, p.z});
    j["paths"] = paths;
  } else {
    j["pendants"] = map.pendants;
  }
  return j;
}

json instance_summary(const Graph& g) {
  return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"max_degree", g.max_degree()}};
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',' || c == '\n' || c == '\t' || c == '\r') c = ' ';
    else if (c != ' ' && (c < '0' || c > '9')) throw InputError("bad vertex list '" + text + "'");
  }
  std::istringstream in(cleaned);
  std::vector<Vertex> out;
  unsigned long long v = 0;
  while (in >> v) {
    if (v > 0xffffffffULL) throw InputError("vertex id too large");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace lved::cli
