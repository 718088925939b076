#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "planar/plane_graph.hpp"

namespace planar {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// On-disk graph document:
//   {"version":1, "rotation": {"<label>": ["<label>", ...], ...}}
// with optional "name" and "source" strings. Each list is the clockwise
// cyclic neighbor order. Labels map to dense ids in sorted label order.
struct GraphDocument {
  int version = 1;
  std::string name;
  std::string source;
  std::vector<std::string> labels;            // index = dense vertex id
  std::vector<std::vector<int>> rotation;     // dense ids

  const std::string& label(int v) const { return labels.at(v); }
  PlaneGraph build() const { return PlaneGraph::build_from_rotation(rotation); }
};

// Schema violations and unknown labels raise ParseError; the mathematical
// validity of the rotation system is checked later by PlaneGraph.
GraphDocument parse_graph_document(const std::string& text);
GraphDocument read_graph_file(const std::string& path);

GraphDocument document_from_graph(const PlaneGraph& g, const std::string& name);

nlohmann::ordered_json document_to_json(const GraphDocument& doc);

}  // namespace planar
