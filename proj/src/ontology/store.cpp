#include "semkg/ontology/store.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "semkg/error.hpp"

namespace semkg::ontology {

namespace {

std::string trim(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  size_t end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

// Splits off the first whitespace-delimited word.
std::pair<std::string, std::string> split_word(const std::string& text) {
  size_t space = text.find_first_of(" \t");
  if (space == std::string::npos) return {text, ""};
  return {text.substr(0, space), trim(text.substr(space + 1))};
}

kg::Value parse_value(const std::string& type_name, const std::string& text,
                      int line_no) {
  const auto fail = [&](const std::string& what) {
    raise(ErrorCode::Parse,
          "ontology line " + std::to_string(line_no) + ": " + what);
  };
  if (type_name == "str") return text;
  if (type_name == "num") {
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      fail("invalid number '" + text + "'");
    }
    return v;
  }
  if (type_name == "bool") {
    if (text == "true") return true;
    if (text == "false") return false;
    fail("boolean value must be true or false, got '" + text + "'");
  }
  if (type_name == "ref") return kg::ClassRef{text};
  fail("value type must be str|num|bool|ref, got '" + type_name + "'");
  return {};
}

}  // namespace

bool is_root_name(const std::string& name) {
  return name == kRootNames[0] || name == kRootNames[1] || name == kRootNames[2];
}

const std::vector<PropertyAssertion>& OntologyStore::assertions_of(
    const std::string& class_name) const {
  static const std::vector<PropertyAssertion> empty;
  auto it = assertions_.find(class_name);
  return it == assertions_.end() ? empty : it->second;
}

std::optional<std::string> OntologyStore::resolve_entity(
    const std::string& surface) const {
  if (auto it = entity_index_.find(surface); it != entity_index_.end()) {
    return it->second;
  }
  if (classes_.contains(surface)) return surface;
  return std::nullopt;
}

std::vector<std::string> OntologyStore::ancestor_chain(
    const std::string& name) const {
  std::vector<std::string> chain;
  auto it = classes_.find(name);
  if (it == classes_.end()) {
    raise(ErrorCode::Unresolved, "unknown ontology class '" + name + "'");
  }
  while (true) {
    chain.push_back(it->first);
    if (it->second.parent.empty()) break;
    it = classes_.find(it->second.parent);
  }
  return chain;
}

OntologyStore load_ontology(std::string_view text) {
  OntologyStore store;
  for (const char* root : kRootNames) {
    store.classes_.emplace(root, OntologyClass{root, ""});
  }

  struct PendingAttr {
    PropertyAssertion assertion;
    int line_no;
  };
  struct PendingEntity {
    std::string surface, class_name;
    int line_no;
  };
  std::vector<PendingAttr> pending_attrs;
  std::vector<PendingEntity> pending_entities;

  std::istringstream lines{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto fail = [&](ErrorCode code, const std::string& what) {
      raise(code, "ontology line " + std::to_string(line_no) + ": " + what);
    };

    if (line.rfind("class ", 0) == 0) {
      std::string rest = trim(line.substr(6));
      size_t colon = rest.find(':');
      if (colon == std::string::npos) {
        fail(ErrorCode::Parse, "expected `class <Name> : <Parent>`");
      }
      std::string name = trim(rest.substr(0, colon));
      std::string parent = trim(rest.substr(colon + 1));
      if (parent.rfind("ROOT:", 0) == 0) parent = trim(parent.substr(5));
      if (name.empty() || parent.empty()) {
        fail(ErrorCode::Parse, "class name or parent missing");
      }
      if (is_root_name(name)) {
        fail(ErrorCode::Duplicate, "class '" + name + "' is a reserved root");
      }
      if (!store.classes_.emplace(name, OntologyClass{name, parent}).second) {
        fail(ErrorCode::Duplicate, "duplicate class '" + name + "'");
      }
    } else if (line.rfind("attr ", 0) == 0) {
      auto [class_name, rest1] = split_word(trim(line.substr(5)));
      auto [attr_name, rest2] = split_word(rest1);
      auto [kind_name, rest3] = split_word(rest2);
      auto [type_name, value_text] = split_word(rest3);
      if (class_name.empty() || attr_name.empty() || kind_name.empty() ||
          type_name.empty()) {
        fail(ErrorCode::Parse,
             "expected `attr <Class> <attr> <intrinsic|extrinsic> "
             "<str|num|bool|ref> <value>`");
      }
      if (kind_name != "intrinsic" && kind_name != "extrinsic") {
        fail(ErrorCode::Parse,
             "property kind must be intrinsic or extrinsic, got '" +
                 kind_name + "'");
      }
      PropertyAssertion assertion{class_name, attr_name,
                                  kg::property_kind_from_name(kind_name),
                                  parse_value(type_name, value_text, line_no)};
      pending_attrs.push_back({std::move(assertion), line_no});
    } else if (line.rfind("entity ", 0) == 0) {
      std::string rest = trim(line.substr(7));
      size_t arrow = rest.find("->");
      if (arrow == std::string::npos) {
        fail(ErrorCode::Parse, "expected `entity <SurfaceForm> -> <Class>`");
      }
      std::string surface = trim(rest.substr(0, arrow));
      std::string class_name = trim(rest.substr(arrow + 2));
      if (surface.empty() || class_name.empty()) {
        fail(ErrorCode::Parse, "entity surface form or class missing");
      }
      pending_entities.push_back({surface, class_name, line_no});
    } else {
      fail(ErrorCode::Parse, "unrecognized line '" + line + "'");
    }
  }

  // Parent resolution and cycle detection. 0 = unvisited, 1 = on the
  // current walk, 2 = proven acyclic.
  std::map<std::string, int> mark;
  for (const auto& [name, cls] : store.classes_) {
    if (mark[name] == 2) continue;
    std::vector<std::string> walk;
    std::string current = name;
    while (true) {
      if (mark[current] == 1) {
        raise(ErrorCode::Cycle,
              "class '" + current + "' lies on an inheritance cycle");
      }
      if (mark[current] == 2) break;
      mark[current] = 1;
      walk.push_back(current);
      const auto& parent = store.classes_.at(current).parent;
      if (parent.empty()) break;
      auto it = store.classes_.find(parent);
      if (it == store.classes_.end()) {
        raise(ErrorCode::Unresolved, "class '" + current +
                                         "' names unknown parent '" + parent +
                                         "'");
      }
      current = parent;
    }
    for (const auto& seen : walk) mark[seen] = 2;
    (void)cls;
  }

  for (auto& pending : pending_attrs) {
    const auto fail = [&](ErrorCode code, const std::string& what) {
      raise(code,
            "ontology line " + std::to_string(pending.line_no) + ": " + what);
    };
    if (!store.classes_.contains(pending.assertion.class_name)) {
      fail(ErrorCode::Unresolved, "attribute on unknown class '" +
                                      pending.assertion.class_name + "'");
    }
    if (const auto* ref = std::get_if<kg::ClassRef>(&pending.assertion.value)) {
      if (!store.classes_.contains(ref->class_name)) {
        fail(ErrorCode::Unresolved,
             "ref value names unknown class '" + ref->class_name + "'");
      }
    }
    auto& slot = store.assertions_[pending.assertion.class_name];
    for (const auto& existing : slot) {
      if (existing.attribute == pending.assertion.attribute) {
        fail(ErrorCode::Duplicate, "duplicate attribute '" +
                                       pending.assertion.attribute +
                                       "' on class '" +
                                       pending.assertion.class_name + "'");
      }
    }
    slot.push_back(std::move(pending.assertion));
  }

  for (const auto& pending : pending_entities) {
    const auto fail = [&](ErrorCode code, const std::string& what) {
      raise(code,
            "ontology line " + std::to_string(pending.line_no) + ": " + what);
    };
    if (!store.classes_.contains(pending.class_name)) {
      fail(ErrorCode::Unresolved, "entity '" + pending.surface +
                                      "' maps to unknown class '" +
                                      pending.class_name + "'");
    }
    if (!store.entity_index_.emplace(pending.surface, pending.class_name)
             .second) {
      fail(ErrorCode::Duplicate,
           "duplicate entity mapping for '" + pending.surface + "'");
    }
  }

  return store;
}

OntologyStore load_ontology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open ontology file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_ontology(buffer.str());
}

std::string serialize(const OntologyStore& store) {
  std::ostringstream out;
  for (const auto& [name, cls] : store.classes()) {
    if (cls.parent.empty()) continue;  // the three roots are implicit
    out << "class " << name << " : ";
    if (is_root_name(cls.parent)) out << "ROOT:";
    out << cls.parent << "\n";
  }
  for (const auto& [name, cls] : store.classes()) {
    (void)cls;
    auto assertions = store.assertions_of(name);
    std::sort(assertions.begin(), assertions.end(),
              [](const PropertyAssertion& a, const PropertyAssertion& b) {
                return a.attribute < b.attribute;
              });
    for (const auto& assertion : assertions) {
      out << "attr " << name << " " << assertion.attribute << " "
          << kg::property_kind_name(assertion.kind) << " ";
      if (const auto* s = std::get_if<std::string>(&assertion.value)) {
        out << "str " << *s;
      } else if (const auto* d = std::get_if<double>(&assertion.value)) {
        out << "num " << kg::format_number(*d);
      } else if (const auto* b = std::get_if<bool>(&assertion.value)) {
        out << "bool " << (*b ? "true" : "false");
      } else {
        out << "ref " << std::get<kg::ClassRef>(assertion.value).class_name;
      }
      out << "\n";
    }
  }
  for (const auto& [surface, class_name] : store.entity_index()) {
    out << "entity " << surface << " -> " << class_name << "\n";
  }
  return out.str();
}

bool is_subclass(const OntologyStore& store, const std::string& child,
                 const std::string& ancestor) {
  if (!store.has_class(ancestor)) {
    raise(ErrorCode::Unresolved, "unknown ontology class '" + ancestor + "'");
  }
  for (const auto& name : store.ancestor_chain(child)) {
    if (name == ancestor) return true;
  }
  return false;
}

QueryResult query(const OntologyStore& store, const std::string& entity) {
  QueryResult result;
  result.resolved_class = store.resolve_entity(entity);
  if (!result.resolved_class) {
    result.diagnostics.push_back(
        {DiagnosticCode::UnknownEntity,
         "entity '" + entity + "' has no ontology mapping"});
    return result;
  }

  // Nearest class first; the first assertion seen for an attribute wins.
  std::set<std::string> seen;
  for (const auto& class_name : store.ancestor_chain(*result.resolved_class)) {
    for (const auto& assertion : store.assertions_of(class_name)) {
      if (!seen.insert(assertion.attribute).second) continue;
      result.tuples.push_back(
          kg::EavTuple{entity, assertion.attribute, assertion.kind,
                       assertion.value});
    }
  }
  std::sort(result.tuples.begin(), result.tuples.end(),
            [](const kg::EavTuple& a, const kg::EavTuple& b) {
              return a.attribute < b.attribute;
            });
  return result;
}

}  // namespace semkg::ontology
