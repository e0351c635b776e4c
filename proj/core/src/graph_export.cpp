#include "evenpoint/graph_export.hpp"

#include <sstream>

#include "json.hpp"

namespace evenpoint {

std::string export_json(const GraphData& graph, int indent) {
  nlohmann::ordered_json doc;
  doc["q"] = graph.q;
  doc["model"] = graph.model;
  if (graph.curve_f) doc["curve_f"] = *graph.curve_f;
  doc["max_degree"] = graph.max_degree;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : graph.vertices) {
    doc["vertices"].push_back(
        {{"id", v.id}, {"place", v.place}, {"degree", v.degree}, {"lambda", v.lambda}});
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [i, j] : graph.edges) doc["edges"].push_back({i, j});
  return doc.dump(indent) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const GraphData& graph) {
  std::ostringstream out;
  out << "graph even_points {\n";
  for (const auto& v : graph.vertices) {
    out << "  " << v.id << " [label=\"" << dot_escape(v.place) << "\"];\n";
  }
  for (const auto& [i, j] : graph.edges) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_csv(const GraphData& graph) {
  std::ostringstream out;
  out << "source,target,source_place,target_place\n";
  for (const auto& [i, j] : graph.edges) {
    out << i << ',' << j << ',' << csv_field(graph.vertices[i].place) << ','
        << csv_field(graph.vertices[j].place) << '\n';
  }
  return out.str();
}

}  // namespace evenpoint
