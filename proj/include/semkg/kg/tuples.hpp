#pragma once

#include <compare>
#include <string>
#include <variant>

namespace semkg::kg {

// Relations come in two families: placements like "on"/"hold" and
// manipulations like "grasp"/"pour". Edges keep the distinction so
// consumers can tell state from action.
enum class RelationKind { Static, Action };

// Intrinsic properties describe the object itself (material, temperature
// tolerance); extrinsic ones describe contextual relations (presented
// action, presented container).
enum class PropertyKind { Intrinsic, Extrinsic };

const char* relation_kind_name(RelationKind kind);
RelationKind relation_kind_from_name(const std::string& name);
const char* property_kind_name(PropertyKind kind);
PropertyKind property_kind_from_name(const std::string& name);

// Attribute value referencing an ontology class (e.g. a partition member
// such as Hot or Empty).
struct ClassRef {
  std::string class_name;

  bool operator==(const ClassRef&) const = default;
  auto operator<=>(const ClassRef&) const = default;
};

// Typed attribute value: string, number, boolean, or class reference.
using Value = std::variant<std::string, double, bool, ClassRef>;

// Shortest round-trip decimal form, shared by every text format that
// carries numbers so outputs stay byte-stable.
std::string format_number(double value);

// Human-readable rendering used in DOT labels and error messages.
std::string value_to_display(const Value& value);

struct EreTuple {
  std::string subject;
  std::string relation;
  RelationKind relation_kind = RelationKind::Static;
  std::string object;

  bool operator==(const EreTuple&) const = default;
};

struct EavTuple {
  std::string entity;
  std::string attribute;
  PropertyKind kind = PropertyKind::Intrinsic;
  Value value;

  bool operator==(const EavTuple&) const = default;
};

}  // namespace semkg::kg
