#include "semkg/captioner/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

#include "semkg/error.hpp"

static_assert(std::endian::native == std::endian::little,
              "checkpoint layout assumes a little-endian host");

namespace semkg::captioner {

namespace {

constexpr char kMagic[8] = {'S', 'E', 'M', 'K', 'G', 'C', 'K', '1'};

void write_u32(std::ostream& out, uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void write_u64(std::ostream& out, uint64_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

uint32_t read_u32(std::istream& in, const std::string& path) {
  uint32_t v = 0;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) {
    raise(ErrorCode::Parse, "truncated checkpoint '" + path + "'");
  }
  return v;
}

uint64_t read_u64(std::istream& in, const std::string& path) {
  uint64_t v = 0;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) {
    raise(ErrorCode::Parse, "truncated checkpoint '" + path + "'");
  }
  return v;
}

}  // namespace

void save_checkpoint(const CaptionModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::Io, "cannot write checkpoint '" + path + "'");

  out.write(kMagic, sizeof kMagic);
  write_u32(out, static_cast<uint32_t>(model.dims.vocab_size));
  write_u32(out, static_cast<uint32_t>(model.dims.embed_size));
  write_u32(out, static_cast<uint32_t>(model.dims.feature_size));
  write_u32(out, static_cast<uint32_t>(model.dims.hidden_size));
  write_u32(out, static_cast<uint32_t>(model.dims.max_caption_len));
  write_u64(out, model.init_seed);

  // The file layout is row-major; Eigen's storage is column-major, so
  // each tensor is reordered through a scratch buffer.
  CaptionModel copy = model;
  for (const auto& view : tensor_views(copy)) {
    std::vector<double> row_major(static_cast<size_t>(view.size));
    for (Eigen::Index r = 0; r < view.rows; ++r) {
      for (Eigen::Index c = 0; c < view.cols; ++c) {
        row_major[static_cast<size_t>(r * view.cols + c)] =
            view.data[c * view.rows + r];
      }
    }
    out.write(reinterpret_cast<const char*>(row_major.data()),
              static_cast<std::streamsize>(view.size * sizeof(double)));
  }
  if (!out) raise(ErrorCode::Io, "write failure on checkpoint '" + path + "'");
}

CaptionModel load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::Io, "cannot open checkpoint '" + path + "'");

  char magic[8];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, 8) != 0) {
    raise(ErrorCode::Parse, "'" + path + "' is not a checkpoint file");
  }

  ModelDims dims;
  dims.vocab_size = static_cast<int>(read_u32(in, path));
  dims.embed_size = static_cast<int>(read_u32(in, path));
  dims.feature_size = static_cast<int>(read_u32(in, path));
  dims.hidden_size = static_cast<int>(read_u32(in, path));
  dims.max_caption_len = static_cast<int>(read_u32(in, path));
  const uint64_t seed = read_u64(in, path);

  CaptionModel model = init_caption_model(dims, seed);
  model.init_seed = seed;
  for (const auto& view : tensor_views(model)) {
    std::vector<double> row_major(static_cast<size_t>(view.size));
    if (!in.read(reinterpret_cast<char*>(row_major.data()),
                 static_cast<std::streamsize>(view.size * sizeof(double)))) {
      raise(ErrorCode::Parse, "truncated checkpoint '" + path + "'");
    }
    for (Eigen::Index r = 0; r < view.rows; ++r) {
      for (Eigen::Index c = 0; c < view.cols; ++c) {
        view.data[c * view.rows + r] =
            row_major[static_cast<size_t>(r * view.cols + c)];
      }
    }
  }
  char extra;
  if (in.read(&extra, 1)) {
    raise(ErrorCode::Parse, "trailing bytes in checkpoint '" + path + "'");
  }
  return model;
}

}  // namespace semkg::captioner
