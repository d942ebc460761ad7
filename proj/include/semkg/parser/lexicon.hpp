#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "semkg/kg/tuples.hpp"

namespace semkg::parser {

// Closed-world term dictionary. The captioner's vocabulary is closed, so
// exact dictionary lookup replaces a learned tagger. Terms may span
// multiple words ("liquid food").
struct Lexicon {
  std::set<std::string> entity_terms;
  std::map<std::string, kg::RelationKind> relation_terms;

  // Longest term length in words, precomputed for longest-match tagging.
  int max_term_words = 1;
};

// Validates disjointness and non-emptiness, computes max_term_words.
Lexicon make_lexicon(std::set<std::string> entities,
                     std::map<std::string, kg::RelationKind> relations);

// Line format: `entity <term>` | `relation <static|action> <term>`,
// `#` comments and blank lines ignored.
Lexicon lexicon_from_text(std::string_view text);
Lexicon load_lexicon(const std::string& path);

}  // namespace semkg::parser
