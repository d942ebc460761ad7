#include "semkg/kg/tuples.hpp"

#include <charconv>

#include "semkg/error.hpp"

namespace semkg::kg {

const char* relation_kind_name(RelationKind kind) {
  return kind == RelationKind::Static ? "static" : "action";
}

RelationKind relation_kind_from_name(const std::string& name) {
  if (name == "static") return RelationKind::Static;
  if (name == "action") return RelationKind::Action;
  raise(ErrorCode::Parse, "unknown relation kind '" + name + "'");
}

const char* property_kind_name(PropertyKind kind) {
  return kind == PropertyKind::Intrinsic ? "intrinsic" : "extrinsic";
}

PropertyKind property_kind_from_name(const std::string& name) {
  if (name == "intrinsic") return PropertyKind::Intrinsic;
  if (name == "extrinsic") return PropertyKind::Extrinsic;
  raise(ErrorCode::Parse, "unknown property kind '" + name + "'");
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string value_to_display(const Value& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  if (const auto* d = std::get_if<double>(&value)) return format_number(*d);
  if (const auto* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
  return "ref:" + std::get<ClassRef>(value).class_name;
}

}  // namespace semkg::kg
