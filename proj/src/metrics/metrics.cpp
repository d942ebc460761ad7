#include "semkg/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "semkg/error.hpp"
#include "semkg/kg/tuples.hpp"

namespace semkg::metrics {

namespace {

constexpr double kRougeBeta = 1.2;

void check_pairs(const std::vector<EvalPair>& pairs) {
  if (pairs.empty()) raise(ErrorCode::InvalidInput, "no evaluation pairs");
  for (const auto& pair : pairs) {
    if (pair.references.empty()) {
      raise(ErrorCode::InvalidInput, "evaluation pair without references");
    }
  }
}

using NgramCounts = std::map<std::vector<std::string>, long>;

NgramCounts count_ngrams(const std::vector<std::string>& tokens, int n) {
  NgramCounts counts;
  if (static_cast<int>(tokens.size()) >= n) {
    for (size_t i = 0; i + n <= tokens.size(); ++i) {
      counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)]++;
    }
  }
  return counts;
}

long lcs_length(const std::vector<std::string>& a,
                const std::vector<std::string>& b) {
  // two-row dynamic program
  std::vector<long> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                     : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

}  // namespace

double bleu(const std::vector<EvalPair>& pairs, int max_n) {
  if (max_n < 1 || max_n > 4) {
    raise(ErrorCode::InvalidInput,
          "BLEU order must be in 1..4, got " + std::to_string(max_n));
  }
  check_pairs(pairs);

  std::vector<long> matched(max_n + 1, 0), candidates(max_n + 1, 0);
  long hyp_total = 0, ref_total = 0;

  for (const auto& pair : pairs) {
    const long hyp_len = static_cast<long>(pair.hypothesis.size());
    hyp_total += hyp_len;

    // closest reference length, shorter on ties
    long best_len = static_cast<long>(pair.references.front().size());
    for (const auto& ref : pair.references) {
      const long len = static_cast<long>(ref.size());
      const long d = std::labs(len - hyp_len);
      const long best_d = std::labs(best_len - hyp_len);
      if (d < best_d || (d == best_d && len < best_len)) best_len = len;
    }
    ref_total += best_len;

    for (int n = 1; n <= max_n; ++n) {
      NgramCounts hyp_counts = count_ngrams(pair.hypothesis, n);
      NgramCounts clip;
      for (const auto& ref : pair.references) {
        for (const auto& [gram, count] : count_ngrams(ref, n)) {
          clip[gram] = std::max(clip[gram], count);
        }
      }
      for (const auto& [gram, count] : hyp_counts) {
        auto it = clip.find(gram);
        if (it != clip.end()) matched[n] += std::min(count, it->second);
      }
      candidates[n] += std::max<long>(0, hyp_len - n + 1);
    }
  }

  if (hyp_total == 0) return 0.0;

  double log_precision_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    if (candidates[n] == 0) continue;  // vacuous order, precision 1
    if (matched[n] == 0) return 0.0;
    log_precision_sum += std::log(static_cast<double>(matched[n]) /
                                  static_cast<double>(candidates[n]));
  }

  const double brevity =
      hyp_total >= ref_total
          ? 1.0
          : std::exp(1.0 - static_cast<double>(ref_total) /
                               static_cast<double>(hyp_total));
  return brevity * std::exp(log_precision_sum / max_n);
}

double rouge_l(const std::vector<EvalPair>& pairs) {
  check_pairs(pairs);

  double total = 0.0;
  for (const auto& pair : pairs) {
    double best = 0.0;
    for (const auto& ref : pair.references) {
      if (pair.hypothesis.empty() || ref.empty()) continue;
      const double lcs = static_cast<double>(lcs_length(pair.hypothesis, ref));
      if (lcs == 0.0) continue;
      const double precision = lcs / static_cast<double>(pair.hypothesis.size());
      const double recall = lcs / static_cast<double>(ref.size());
      const double beta2 = kRougeBeta * kRougeBeta;
      const double f =
          (1.0 + beta2) * precision * recall / (recall + beta2 * precision);
      best = std::max(best, f);
    }
    total += best;
  }
  return total / static_cast<double>(pairs.size());
}

std::vector<std::string> split_tokens(const std::string& sentence) {
  std::vector<std::string> tokens;
  std::istringstream in(sentence);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::vector<EvalPair> read_results_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open results file '" + path + "'");

  std::vector<EvalPair> pairs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos
                                              ? std::string::npos
                                              : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 3) {
      raise(ErrorCode::Parse,
            "results line " + std::to_string(line_no) +
                ": expected clip_id<TAB>hypothesis<TAB>reference");
    }
    EvalPair pair;
    pair.hypothesis = split_tokens(fields[1]);
    for (size_t i = 2; i < fields.size(); ++i) {
      pair.references.push_back(split_tokens(fields[i]));
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::string metrics_report(const std::vector<EvalPair>& pairs) {
  std::ostringstream out;
  out << "pairs=" << pairs.size() << "\n";
  for (int n = 1; n <= 4; ++n) {
    out << "bleu" << n << "=" << kg::format_number(bleu(pairs, n)) << "\n";
  }
  out << "rouge_l=" << kg::format_number(rouge_l(pairs)) << "\n";
  return out.str();
}

}  // namespace semkg::metrics
