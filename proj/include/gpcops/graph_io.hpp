#pragma once

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gpcops/graph.hpp"

namespace gpcops {

enum class GraphFormat { Dot, Json, AdjList };

inline GraphFormat parse_graph_format(std::string_view text) {
  if (text == "dot") return GraphFormat::Dot;
  if (text == "json") return GraphFormat::Json;
  if (text == "adjlist") return GraphFormat::AdjList;
  throw FormatError("unknown graph format '" + std::string(text) + "'");
}

/// Deterministic text serialization. Edges are ordered by (min id, max id).
inline std::string export_graph(const GPGraph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::Dot: {
      out << "graph GP_" << g.n() << '_' << g.k() << " {\n";
      for (auto [u, v] : g.edges()) out << "  " << g.name(u) << " -- " << g.name(v) << ";\n";
      out << "}\n";
      break;
    }
    case GraphFormat::Json: {
      nlohmann::json edges = nlohmann::json::array();
      for (auto [u, v] : g.edges()) edges.push_back({u, v});
      nlohmann::json doc = {{"n", g.n()}, {"k", g.k()}, {"edges", std::move(edges)}};
      out << doc.dump() << '\n';
      break;
    }
    case GraphFormat::AdjList: {
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        auto nbrs = g.neighbours(u);
        std::sort(nbrs.begin(), nbrs.end());
        out << g.name(u) << ':';
        for (VertexId v : nbrs) out << ' ' << g.name(v);
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace gpcops
