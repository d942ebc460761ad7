#include <sstream>

#include "semkg/captioner/types.hpp"
#include "semkg/error.hpp"

namespace semkg::captioner {

namespace {
const char* kReserved[4] = {"<pad>", "<sos>", "eoc", "<unk>"};
}

const char* Vocabulary::reserved_token(int id) { return kReserved[id]; }

Vocabulary Vocabulary::from_tokens(std::vector<std::string> tokens) {
  if (tokens.size() < 4) {
    raise(ErrorCode::InvalidInput,
          "vocabulary needs at least the 4 reserved tokens, got " +
              std::to_string(tokens.size()));
  }
  for (int i = 0; i < 4; ++i) {
    if (tokens[i] != kReserved[i]) {
      raise(ErrorCode::InvalidInput,
            "vocabulary token " + std::to_string(i) + " must be '" +
                kReserved[i] + "', got '" + tokens[i] + "'");
    }
  }
  Vocabulary vocab;
  vocab.tokens_ = std::move(tokens);
  for (int id = 0; id < vocab.size(); ++id) {
    const std::string& token = vocab.tokens_[id];
    if (token.empty()) {
      raise(ErrorCode::InvalidInput,
            "vocabulary token " + std::to_string(id) + " is empty");
    }
    if (!vocab.index_.emplace(token, id).second) {
      raise(ErrorCode::InvalidInput, "duplicate vocabulary token '" + token + "'");
    }
  }
  return vocab;
}

const std::string& Vocabulary::token(int id) const {
  if (id < 0 || id >= size()) {
    raise(ErrorCode::InvalidInput,
          "token id " + std::to_string(id) + " outside vocabulary of size " +
              std::to_string(size()));
  }
  return tokens_[id];
}

std::optional<int> Vocabulary::id_of(const std::string& token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Vocabulary::encode_sentence(const std::string& sentence) const {
  std::vector<int> ids;
  std::istringstream in(sentence);
  std::string token;
  while (in >> token) {
    auto id = id_of(token);
    if (!id) {
      raise(ErrorCode::InvalidInput,
            "token '" + token + "' is not in the vocabulary");
    }
    ids.push_back(*id);
  }
  return ids;
}

std::string Vocabulary::sentence_from_ids(const std::vector<int>& ids) const {
  std::string sentence;
  for (int id : ids) {
    if (id == kEoc) break;
    if (!sentence.empty()) sentence += ' ';
    sentence += token(id);
  }
  return sentence;
}

}  // namespace semkg::captioner
