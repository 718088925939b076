#include "planar/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace planar {

GraphDocument parse_graph_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (!j.contains("version") || !j["version"].is_number_integer())
    throw ParseError("missing integer field \"version\"");
  GraphDocument doc;
  doc.version = j["version"].get<int>();
  if (doc.version != 1)
    throw ParseError("unsupported version " + std::to_string(doc.version));
  if (!j.contains("rotation") || !j["rotation"].is_object())
    throw ParseError("missing object field \"rotation\"");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("field \"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("source")) {
    if (!j["source"].is_string())
      throw ParseError("field \"source\" must be a string");
    doc.source = j["source"].get<std::string>();
  }

  const auto& rot = j["rotation"];
  for (auto it = rot.begin(); it != rot.end(); ++it) doc.labels.push_back(it.key());
  std::sort(doc.labels.begin(), doc.labels.end());
  std::map<std::string, int> id;
  for (int i = 0; i < static_cast<int>(doc.labels.size()); ++i)
    id[doc.labels[i]] = i;

  doc.rotation.resize(doc.labels.size());
  for (auto it = rot.begin(); it != rot.end(); ++it) {
    if (!it.value().is_array())
      throw ParseError("rotation of \"" + it.key() + "\" must be an array");
    std::vector<int>& row = doc.rotation[id[it.key()]];
    for (const auto& nb : it.value()) {
      if (!nb.is_string())
        throw ParseError("rotation of \"" + it.key() +
                         "\" must contain vertex labels (strings)");
      auto found = id.find(nb.get<std::string>());
      if (found == id.end())
        throw ParseError("rotation of \"" + it.key() + "\" references unknown vertex \"" +
                         nb.get<std::string>() + "\"");
      row.push_back(found->second);
    }
  }
  return doc;
}

GraphDocument read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_document(ss.str());
}

GraphDocument document_from_graph(const PlaneGraph& g, const std::string& name) {
  GraphDocument doc;
  doc.name = name;
  int width = 1;
  for (int n = g.vertex_count() - 1; n >= 10; n /= 10) ++width;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string s = std::to_string(v);
    doc.labels.push_back(std::string(width - s.size(), '0') + s);
  }
  doc.rotation = g.rotation();
  return doc;
}

nlohmann::ordered_json document_to_json(const GraphDocument& doc) {
  nlohmann::ordered_json j;
  j["version"] = doc.version;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.source.empty()) j["source"] = doc.source;
  nlohmann::ordered_json rot = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < doc.labels.size(); ++v) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int u : doc.rotation[v]) row.push_back(doc.labels[u]);
    rot[doc.labels[v]] = std::move(row);
  }
  j["rotation"] = std::move(rot);
  return j;
}

}  // namespace planar
