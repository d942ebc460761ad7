#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace semkg::captioner {

// Per-clip matrix of frame feature vectors, in temporal order. Features
// are produced upstream (e.g. CNN activations) and read from file.
struct FeatureSequence {
  std::string clip_id;
  std::vector<Eigen::VectorXd> frames;

  int frame_count() const { return static_cast<int>(frames.size()); }
  int feature_dim() const {
    return frames.empty() ? 0 : static_cast<int>(frames.front().size());
  }
};

// Token table with four reserved control slots at the front.
class Vocabulary {
 public:
  static constexpr int kPad = 0;
  static constexpr int kSos = 1;
  static constexpr int kEoc = 2;
  static constexpr int kUnk = 3;
  static const char* reserved_token(int id);

  // Validates the reserved prefix and token uniqueness.
  static Vocabulary from_tokens(std::vector<std::string> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(int id) const;
  std::optional<int> id_of(const std::string& token) const;

  // Whitespace-splits and maps to ids. Raises InvalidInput naming the
  // first token absent from the vocabulary.
  std::vector<int> encode_sentence(const std::string& sentence) const;

  // Space-joined tokens, stopping before `eoc`.
  std::string sentence_from_ids(const std::vector<int>& ids) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

// A decoded caption: vocabulary ids plus whether `eoc` ended it.
struct TokenSequence {
  std::vector<int> ids;
  bool terminated = false;

  bool operator==(const TokenSequence&) const = default;
};

}  // namespace semkg::captioner
