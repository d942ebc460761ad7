#pragma once

#include <string>
#include <vector>

#include "semkg/diagnostics.hpp"
#include "semkg/kg/tuples.hpp"
#include "semkg/parser/lexicon.hpp"

namespace semkg::parser {

enum class TokenTag { Entity, Relation, Other };

const char* token_tag_name(TokenTag tag);

struct TaggedToken {
  // Multi-word lexicon matches collapse into one token whose surface keeps
  // the spaces, so the space-joined surfaces reproduce the input.
  std::string surface;
  TokenTag tag = TokenTag::Other;
  kg::RelationKind relation_kind = kg::RelationKind::Static;  // when Relation

  bool operator==(const TaggedToken&) const = default;
};

struct TaggedSentence {
  std::vector<TaggedToken> tokens;

  bool operator==(const TaggedSentence&) const = default;
};

// Splits on whitespace and strips trailing punctuation. Tokens starting
// with an uppercase letter are entity names by convention and keep their
// case; everything else is lowercased.
std::vector<std::string> tokenize(const std::string& sentence);

// Dictionary tagging, longest match first over multi-word terms.
TaggedSentence tag(const std::vector<std::string>& tokens, const Lexicon& lexicon);

struct EreParseResult {
  std::vector<kg::EreTuple> tuples;
  std::vector<Diagnostic> diagnostics;  // NO_TUPLE when tuples is empty
};

// After dropping OTHER tokens, every contiguous ENTITY-RELATION-ENTITY
// window yields one tuple; chains E R E R E share the middle entity.
EreParseResult parse_ere(const TaggedSentence& tagged);

}  // namespace semkg::parser
