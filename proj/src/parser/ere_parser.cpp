#include "semkg/parser/ere_parser.hpp"

#include <cctype>

namespace semkg::parser {

const char* token_tag_name(TokenTag tag) {
  switch (tag) {
    case TokenTag::Entity: return "ENTITY";
    case TokenTag::Relation: return "RELATION";
    case TokenTag::Other: return "OTHER";
  }
  return "OTHER";
}

std::vector<std::string> tokenize(const std::string& sentence) {
  std::vector<std::string> tokens;
  size_t i = 0;
  const size_t n = sentence.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
    size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
    if (i == start) break;
    std::string word = sentence.substr(start, i - start);

    // strip trailing punctuation
    size_t end = word.size();
    while (end > 0) {
      char c = word[end - 1];
      if (c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':') {
        --end;
      } else {
        break;
      }
    }
    word.resize(end);
    if (word.empty()) continue;

    // Entity names are written in upper camel case; leave them untouched
    // and fold everything else to lowercase.
    if (!std::isupper(static_cast<unsigned char>(word[0]))) {
      for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    tokens.push_back(std::move(word));
  }
  return tokens;
}

TaggedSentence tag(const std::vector<std::string>& tokens, const Lexicon& lexicon) {
  TaggedSentence tagged;
  size_t i = 0;
  while (i < tokens.size()) {
    size_t longest = std::min<size_t>(lexicon.max_term_words, tokens.size() - i);
    bool matched = false;
    for (size_t span = longest; span >= 1 && !matched; --span) {
      std::string candidate = tokens[i];
      for (size_t k = 1; k < span; ++k) candidate += " " + tokens[i + k];
      if (lexicon.entity_terms.contains(candidate)) {
        tagged.tokens.push_back({candidate, TokenTag::Entity, kg::RelationKind::Static});
        matched = true;
      } else if (auto it = lexicon.relation_terms.find(candidate);
                 it != lexicon.relation_terms.end()) {
        tagged.tokens.push_back({candidate, TokenTag::Relation, it->second});
        matched = true;
      }
      if (matched) i += span;
    }
    if (!matched) {
      tagged.tokens.push_back({tokens[i], TokenTag::Other, kg::RelationKind::Static});
      ++i;
    }
  }
  return tagged;
}

EreParseResult parse_ere(const TaggedSentence& tagged) {
  // OTHER tokens carry no tuple structure; drop them first.
  std::vector<const TaggedToken*> content;
  for (const auto& token : tagged.tokens) {
    if (token.tag != TokenTag::Other) content.push_back(&token);
  }

  EreParseResult result;
  for (size_t i = 0; content.size() >= 3 && i <= content.size() - 3; ++i) {
    const TaggedToken& a = *content[i];
    const TaggedToken& b = *content[i + 1];
    const TaggedToken& c = *content[i + 2];
    if (a.tag == TokenTag::Entity && b.tag == TokenTag::Relation &&
        c.tag == TokenTag::Entity) {
      result.tuples.push_back(
          kg::EreTuple{a.surface, b.surface, b.relation_kind, c.surface});
    }
  }
  if (result.tuples.empty()) {
    result.diagnostics.push_back(
        {DiagnosticCode::NoTuple, "caption produced no E-R-E tuple"});
  }
  return result;
}

}  // namespace semkg::parser
