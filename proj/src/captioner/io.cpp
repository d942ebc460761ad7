#include "semkg/captioner/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "semkg/error.hpp"
#include "semkg/kg/tuples.hpp"

namespace semkg::captioner {

namespace {

double parse_double(std::string_view text, const std::string& path, int line_no) {
  // tolerate surrounding spaces
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    raise(ErrorCode::Parse, path + " line " + std::to_string(line_no) +
                                ": invalid feature value '" +
                                std::string(text) + "'");
  }
  return v;
}

}  // namespace

FeatureSequence read_feature_file(const std::string& path) {
  return read_feature_file(path, std::filesystem::path(path).stem().string());
}

FeatureSequence read_feature_file(const std::string& path,
                                  const std::string& clip_id) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open feature file '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) {
    raise(ErrorCode::Parse, path + ": empty feature file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("D=", 0) != 0) {
    raise(ErrorCode::Parse, path + " line 1: expected header `D=<int>`");
  }
  int dim = 0;
  {
    const std::string text = line.substr(2);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), dim);
    if (ec != std::errc{} || ptr != text.data() + text.size() || dim < 1) {
      raise(ErrorCode::Parse, path + " line 1: invalid dimension '" + text + "'");
    }
  }

  FeatureSequence seq;
  seq.clip_id = clip_id;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    Eigen::VectorXd frame(dim);
    size_t start = 0;
    for (int i = 0; i < dim; ++i) {
      const size_t comma = line.find(',', start);
      const std::string_view rest = std::string_view(line).substr(start);
      if (i + 1 < dim) {
        if (comma == std::string::npos) {
          raise(ErrorCode::Parse, path + " line " + std::to_string(line_no) +
                                      ": expected " + std::to_string(dim) +
                                      " values");
        }
        frame[i] = parse_double(rest.substr(0, comma - start), path, line_no);
        start = comma + 1;
      } else {
        if (comma != std::string::npos) {
          raise(ErrorCode::Parse, path + " line " + std::to_string(line_no) +
                                      ": more than " + std::to_string(dim) +
                                      " values");
        }
        frame[i] = parse_double(rest, path, line_no);
      }
    }
    seq.frames.push_back(std::move(frame));
  }
  if (seq.frames.empty()) {
    raise(ErrorCode::Parse, path + ": feature file has no frames");
  }
  return seq;
}

void write_feature_file(const std::string& path, const FeatureSequence& seq) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) raise(ErrorCode::Io, "cannot write feature file '" + path + "'");
  out << "D=" << seq.feature_dim() << "\n";
  for (const auto& frame : seq.frames) {
    for (Eigen::Index i = 0; i < frame.size(); ++i) {
      if (i) out << ",";
      out << kg::format_number(frame[i]);
    }
    out << "\n";
  }
  if (!out) raise(ErrorCode::Io, "write failure on feature file '" + path + "'");
}

Vocabulary load_vocabulary(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open vocabulary file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    tokens.push_back(line);
  }
  // a trailing blank line is routine, interior blanks are not
  while (!tokens.empty() && tokens.back().empty()) tokens.pop_back();
  try {
    return Vocabulary::from_tokens(std::move(tokens));
  } catch (const Error& e) {
    raise(e.code(), path + ": " + e.what());
  }
}

}  // namespace semkg::captioner
