#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semkg/kg/tuples.hpp"

namespace semkg::kg {

struct AttributeEntry {
  PropertyKind kind = PropertyKind::Intrinsic;
  Value value;

  bool operator==(const AttributeEntry&) const = default;
};

struct GraphNode {
  std::optional<std::string> class_name;
  std::map<std::string, AttributeEntry> attributes;

  bool operator==(const GraphNode&) const = default;
};

struct GraphEdge {
  std::string subject;
  std::string relation;
  RelationKind kind = RelationKind::Static;
  std::string object;

  bool operator==(const GraphEdge&) const = default;
  auto operator<=>(const GraphEdge&) const = default;
};

// Written when an attribute merge overwrites a differing value. The log
// keeps conflicting merges auditable without blocking the pipeline.
struct ProvenanceRecord {
  std::string entity;
  std::string attribute;
  Value replaced;
  Value value;

  bool operator==(const ProvenanceRecord&) const = default;
};

// Per-clip graph: entity nodes decorated with attributes, relation edges
// between them. Containers are ordered so serialization is canonical.
struct KnowledgeGraph {
  std::string clip_id;
  std::map<std::string, GraphNode> nodes;
  std::set<GraphEdge> edges;
  std::vector<ProvenanceRecord> provenance;

  bool operator==(const KnowledgeGraph&) const = default;
};

// Creates missing subject/object nodes and inserts edges. Idempotent.
void merge_ere(KnowledgeGraph& graph, const std::vector<EreTuple>& tuples);

// Attaches attributes to existing nodes. Re-merging an equal value is a
// no-op; a differing value overwrites and appends a provenance record.
// A tuple naming a node absent from the graph is a pipeline ordering bug
// and raises DanglingEav.
void merge_eav(KnowledgeGraph& graph, const std::vector<EavTuple>& tuples);

// Sets the ontology class recorded on an existing node.
void set_node_class(KnowledgeGraph& graph, const std::string& entity,
                    const std::string& class_name);

// Structural invariant check: every edge endpoint resolves to a node.
void validate(const KnowledgeGraph& graph);

}  // namespace semkg::kg
