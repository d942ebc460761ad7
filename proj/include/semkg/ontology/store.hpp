#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semkg/diagnostics.hpp"
#include "semkg/kg/tuples.hpp"

namespace semkg::ontology {

// The three fixed roots of the taxonomy: workspace objects, semantic
// proportional partitions (temperature, emptiness, ...), and manipulation
// task configurations.
inline constexpr const char* kRootNames[3] = {"DomainThing", "DomainPartition",
                                              "DomainTask"};

bool is_root_name(const std::string& name);

struct OntologyClass {
  std::string name;
  std::string parent;  // empty for the three roots

  bool operator==(const OntologyClass&) const = default;
};

struct PropertyAssertion {
  std::string class_name;
  std::string attribute;
  kg::PropertyKind kind = kg::PropertyKind::Intrinsic;
  kg::Value value;

  bool operator==(const PropertyAssertion&) const = default;
};

// Immutable after load; reads are safe from any thread.
class OntologyStore {
 public:
  const std::map<std::string, OntologyClass>& classes() const { return classes_; }
  const std::map<std::string, std::string>& entity_index() const { return entity_index_; }

  size_t class_count() const { return classes_.size(); }
  bool has_class(const std::string& name) const { return classes_.contains(name); }

  // Assertions declared directly on one class, in declaration order.
  const std::vector<PropertyAssertion>& assertions_of(const std::string& class_name) const;

  // Surface form -> class. Exact entity-index lookup with fallback to an
  // exact class-name match. nullopt when neither resolves.
  std::optional<std::string> resolve_entity(const std::string& surface) const;

  // Chain from `name` up to its root, inclusive, nearest first.
  std::vector<std::string> ancestor_chain(const std::string& name) const;

 private:
  friend OntologyStore load_ontology(std::string_view text);

  std::map<std::string, OntologyClass> classes_;
  std::map<std::string, std::vector<PropertyAssertion>> assertions_;
  std::map<std::string, std::string> entity_index_;
};

// Parses the line-oriented ontology format:
//   class <Name> : <ParentName|ROOT:DomainThing|ROOT:DomainPartition|ROOT:DomainTask>
//   attr <ClassName> <attrName> <intrinsic|extrinsic> <str|num|bool|ref> <value>
//   entity <SurfaceForm> -> <ClassName>
// Order-independent; `#` comments and blank lines ignored. Raises Cycle,
// Duplicate or Unresolved with the offending name.
OntologyStore load_ontology(std::string_view text);
OntologyStore load_ontology_file(const std::string& path);

// Canonical text form; load_ontology(serialize(store)) reproduces store and
// serialize(load_ontology(s)) == s for canonical s.
std::string serialize(const OntologyStore& store);

// True iff ancestor lies on child's parent chain (reflexive). Raises
// Unresolved on unknown names.
bool is_subclass(const OntologyStore& store, const std::string& child,
                 const std::string& ancestor);

struct QueryResult {
  std::vector<kg::EavTuple> tuples;                // sorted by attribute
  std::optional<std::string> resolved_class;
  std::vector<Diagnostic> diagnostics;             // UNKNOWN_ENTITY if unresolved
};

// All assertions on the entity's class and its ancestors; the nearest
// class wins on attribute-name collisions. Unresolvable entities yield an
// empty result plus an UNKNOWN_ENTITY diagnostic.
QueryResult query(const OntologyStore& store, const std::string& entity);

}  // namespace semkg::ontology
