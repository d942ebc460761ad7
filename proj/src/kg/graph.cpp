#include "semkg/kg/graph.hpp"

#include "semkg/error.hpp"

namespace semkg::kg {

void merge_ere(KnowledgeGraph& graph, const std::vector<EreTuple>& tuples) {
  for (const auto& tuple : tuples) {
    graph.nodes.try_emplace(tuple.subject);
    graph.nodes.try_emplace(tuple.object);
    graph.edges.insert(GraphEdge{tuple.subject, tuple.relation,
                                 tuple.relation_kind, tuple.object});
  }
  validate(graph);
}

void merge_eav(KnowledgeGraph& graph, const std::vector<EavTuple>& tuples) {
  for (const auto& tuple : tuples) {
    auto node = graph.nodes.find(tuple.entity);
    if (node == graph.nodes.end()) {
      raise(ErrorCode::DanglingEav,
            "attribute merge for entity '" + tuple.entity +
                "' which is not a node of clip '" + graph.clip_id + "'");
    }
    AttributeEntry entry{tuple.kind, tuple.value};
    auto [slot, inserted] =
        node->second.attributes.try_emplace(tuple.attribute, entry);
    if (!inserted && !(slot->second == entry)) {
      graph.provenance.push_back(ProvenanceRecord{
          tuple.entity, tuple.attribute, slot->second.value, tuple.value});
      slot->second = entry;
    }
  }
  validate(graph);
}

void set_node_class(KnowledgeGraph& graph, const std::string& entity,
                    const std::string& class_name) {
  auto node = graph.nodes.find(entity);
  if (node == graph.nodes.end()) {
    raise(ErrorCode::InvalidInput,
          "cannot set class of unknown node '" + entity + "'");
  }
  node->second.class_name = class_name;
}

void validate(const KnowledgeGraph& graph) {
  for (const auto& edge : graph.edges) {
    if (!graph.nodes.contains(edge.subject) ||
        !graph.nodes.contains(edge.object)) {
      raise(ErrorCode::InvalidInput,
            "edge '" + edge.subject + " " + edge.relation + " " + edge.object +
                "' has an endpoint with no node");
    }
  }
}

}  // namespace semkg::kg
