#pragma once

#include <string>
#include <string_view>

#include "semkg/kg/graph.hpp"

namespace semkg::kg {

// Canonical JSON: object keys sorted, edges and provenance in fixed order,
// byte-stable across runs. from_json(to_json(g)) reconstructs g exactly.
std::string to_json(const KnowledgeGraph& graph);

// Raises Parse with the byte offset on malformed JSON, and Parse with a
// descriptive message on schema violations.
KnowledgeGraph from_json(std::string_view text);

// Directed-graph description: one box-shaped node statement per entity
// (labeled with class and attributes), one edge statement per relation.
std::string to_dot(const KnowledgeGraph& graph);

}  // namespace semkg::kg
