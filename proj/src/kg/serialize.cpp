#include "semkg/kg/serialize.hpp"

#include <sstream>

#include "json.hpp"
#include "semkg/error.hpp"

namespace semkg::kg {

namespace {

using nlohmann::json;

json value_to_json(const Value& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  if (const auto* d = std::get_if<double>(&value)) return *d;
  if (const auto* b = std::get_if<bool>(&value)) return *b;
  return json{{"ref", std::get<ClassRef>(value).class_name}};
}

Value value_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return j.get<double>();
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_object() && j.size() == 1 && j.contains("ref") &&
      j["ref"].is_string()) {
    return ClassRef{j["ref"].get<std::string>()};
  }
  raise(ErrorCode::Parse, "attribute value must be a string, number, boolean "
                          "or {\"ref\": class} object, got: " + j.dump());
}

const json& require(const json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end()) {
    raise(ErrorCode::Parse,
          std::string("missing key '") + key + "' in " + where);
  }
  return *it;
}

}  // namespace

std::string to_json(const KnowledgeGraph& graph) {
  json nodes = json::object();
  for (const auto& [name, node] : graph.nodes) {
    json entry = json::object();
    if (node.class_name) entry["class"] = *node.class_name;
    json attrs = json::object();
    for (const auto& [attr, slot] : node.attributes) {
      attrs[attr] = json{{"kind", property_kind_name(slot.kind)},
                         {"value", value_to_json(slot.value)}};
    }
    entry["attributes"] = std::move(attrs);
    nodes[name] = std::move(entry);
  }

  json edges = json::array();
  for (const auto& edge : graph.edges) {  // std::set order: (s, r, kind, o)
    edges.push_back(json{{"s", edge.subject},
                         {"r", edge.relation},
                         {"kind", relation_kind_name(edge.kind)},
                         {"o", edge.object}});
  }

  json provenance = json::array();
  for (const auto& record : graph.provenance) {
    provenance.push_back(json{{"entity", record.entity},
                              {"attribute", record.attribute},
                              {"replaced", value_to_json(record.replaced)},
                              {"value", value_to_json(record.value)}});
  }

  json root{{"clip_id", graph.clip_id},
            {"nodes", std::move(nodes)},
            {"edges", std::move(edges)},
            {"provenance", std::move(provenance)}};
  return root.dump(2) + "\n";
}

KnowledgeGraph from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::Parse, "malformed graph JSON at byte " +
                                std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) raise(ErrorCode::Parse, "graph JSON root must be an object");

  KnowledgeGraph graph;
  graph.clip_id = require(root, "clip_id", "graph").get<std::string>();

  for (const auto& [name, entry] : require(root, "nodes", "graph").items()) {
    GraphNode node;
    if (entry.contains("class")) node.class_name = entry["class"].get<std::string>();
    for (const auto& [attr, slot] : require(entry, "attributes", "node").items()) {
      node.attributes[attr] = AttributeEntry{
          property_kind_from_name(require(slot, "kind", "attribute").get<std::string>()),
          value_from_json(require(slot, "value", "attribute"))};
    }
    graph.nodes.emplace(name, std::move(node));
  }

  for (const auto& entry : require(root, "edges", "graph")) {
    graph.edges.insert(GraphEdge{
        require(entry, "s", "edge").get<std::string>(),
        require(entry, "r", "edge").get<std::string>(),
        relation_kind_from_name(require(entry, "kind", "edge").get<std::string>()),
        require(entry, "o", "edge").get<std::string>()});
  }

  for (const auto& entry : require(root, "provenance", "graph")) {
    graph.provenance.push_back(ProvenanceRecord{
        require(entry, "entity", "provenance record").get<std::string>(),
        require(entry, "attribute", "provenance record").get<std::string>(),
        value_from_json(require(entry, "replaced", "provenance record")),
        value_from_json(require(entry, "value", "provenance record"))});
  }

  validate(graph);
  return graph;
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const KnowledgeGraph& graph) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(graph.clip_id) << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  for (const auto& [name, node] : graph.nodes) {
    std::string label = dot_escape(name);
    if (node.class_name) label += "\\nclass: " + dot_escape(*node.class_name);
    for (const auto& [attr, slot] : node.attributes) {
      label += "\\n" + dot_escape(attr) + " = " +
               dot_escape(value_to_display(slot.value));
    }
    out << "  \"" << dot_escape(name) << "\" [label=\"" << label << "\"];\n";
  }
  for (const auto& edge : graph.edges) {
    out << "  \"" << dot_escape(edge.subject) << "\" -> \""
        << dot_escape(edge.object) << "\" [label=\""
        << dot_escape(edge.relation) << " ("
        << relation_kind_name(edge.kind) << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace semkg::kg
