#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evenpoint/even_graph.hpp"

namespace evenpoint {

/// Model-independent snapshot of an even graph for serialization.
struct GraphData {
  struct Vertex {
    std::size_t id;
    std::string place;
    int degree;
    std::string lambda;
  };
  std::uint64_t q = 0;
  std::string model;
  std::optional<std::string> curve_f;
  int max_degree = 0;
  std::vector<Vertex> vertices;
  /// Pairs (i, j) with i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

template <class Model>
GraphData graph_data(const Model& model, const EvenGraph<Model>& graph) {
  GraphData out;
  out.q = model.field().order();
  out.model = model.model_name();
  out.curve_f = model.curve_f_name();
  out.max_degree = graph.max_degree;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    out.vertices.push_back({i, model.place_name(graph.vertices[i]),
                            model.place_degree(graph.vertices[i]),
                            model.class_name(graph.lambdas[i])});
    for (std::size_t j = i + 1; j < graph.size(); ++j) {
      if (graph.adjacent(i, j)) out.edges.emplace_back(i, j);
    }
  }
  return out;
}

/// {"q", "model", "curve_f"?, "max_degree", "vertices": [...], "edges": [[i, j], ...]}
std::string export_json(const GraphData& graph, int indent = 2);
/// Undirected DOT graph labelled by place strings.
std::string export_dot(const GraphData& graph);
/// Edge list with a header row "source,target,source_place,target_place".
std::string export_csv(const GraphData& graph);

}  // namespace evenpoint
