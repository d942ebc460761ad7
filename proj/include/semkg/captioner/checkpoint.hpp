#pragma once

#include <string>

#include "semkg/captioner/model.hpp"

namespace semkg::captioner {

// Binary checkpoint: magic "SEMKGCK1", then V, E, D, H, K as uint32 LE,
// the init seed as uint64 LE, then every parameter tensor as row-major
// float64 LE in tensor_views() order. Byte-stable for identical models.
void save_checkpoint(const CaptionModel& model, const std::string& path);
CaptionModel load_checkpoint(const std::string& path);

}  // namespace semkg::captioner
