#include "semkg/parser/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "semkg/error.hpp"

namespace semkg::parser {

namespace {

int count_words(const std::string& term) {
  int words = 1;
  for (char c : term) {
    if (c == ' ') ++words;
  }
  return words;
}

std::string trim(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  size_t end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

}  // namespace

Lexicon make_lexicon(std::set<std::string> entities,
                     std::map<std::string, kg::RelationKind> relations) {
  Lexicon lex;
  lex.entity_terms = std::move(entities);
  lex.relation_terms = std::move(relations);
  for (const auto& term : lex.entity_terms) {
    if (term.empty()) raise(ErrorCode::InvalidInput, "empty entity term");
    if (lex.relation_terms.contains(term)) {
      raise(ErrorCode::InvalidInput,
            "term '" + term + "' is both an entity and a relation");
    }
    lex.max_term_words = std::max(lex.max_term_words, count_words(term));
  }
  for (const auto& [term, kind] : lex.relation_terms) {
    (void)kind;
    if (term.empty()) raise(ErrorCode::InvalidInput, "empty relation term");
    lex.max_term_words = std::max(lex.max_term_words, count_words(term));
  }
  return lex;
}

Lexicon lexicon_from_text(std::string_view text) {
  std::set<std::string> entities;
  std::map<std::string, kg::RelationKind> relations;

  std::istringstream lines{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto fail = [&](const std::string& what) {
      raise(ErrorCode::Parse,
            "lexicon line " + std::to_string(line_no) + ": " + what);
    };

    if (line.rfind("entity ", 0) == 0) {
      std::string term = trim(line.substr(7));
      if (term.empty()) fail("entity term missing");
      if (!entities.insert(term).second) fail("duplicate entity '" + term + "'");
    } else if (line.rfind("relation ", 0) == 0) {
      std::string rest = trim(line.substr(9));
      size_t space = rest.find(' ');
      if (space == std::string::npos) fail("expected `relation <static|action> <term>`");
      std::string kind_name = rest.substr(0, space);
      std::string term = trim(rest.substr(space + 1));
      if (kind_name != "static" && kind_name != "action") {
        fail("relation kind must be static or action, got '" + kind_name + "'");
      }
      if (term.empty()) fail("relation term missing");
      auto kind = kg::relation_kind_from_name(kind_name);
      if (!relations.emplace(term, kind).second) {
        fail("duplicate relation '" + term + "'");
      }
    } else {
      fail("expected `entity ...` or `relation ...`, got '" + line + "'");
    }
  }
  return make_lexicon(std::move(entities), std::move(relations));
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open lexicon file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return lexicon_from_text(buffer.str());
}

}  // namespace semkg::parser
