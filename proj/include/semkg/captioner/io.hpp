#pragma once

#include <string>

#include "semkg/captioner/types.hpp"

namespace semkg::captioner {

// Feature CSV: first line `D=<int>`, then one line of D comma-separated
// decimal floats per frame, in temporal order. clip_id defaults to the
// file name stem.
FeatureSequence read_feature_file(const std::string& path);
FeatureSequence read_feature_file(const std::string& path,
                                  const std::string& clip_id);
void write_feature_file(const std::string& path, const FeatureSequence& seq);

// Vocabulary file: UTF-8, one token per line, line number = id; lines 0-3
// must be the reserved tokens.
Vocabulary load_vocabulary(const std::string& path);

}  // namespace semkg::captioner
