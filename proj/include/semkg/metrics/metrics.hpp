#pragma once

#include <string>
#include <vector>

namespace semkg::metrics {

struct EvalPair {
  std::vector<std::string> hypothesis;
  std::vector<std::vector<std::string>> references;  // non-empty
};

// Corpus-level BLEU over n-gram orders 1..max_n: modified (clipped)
// precision per order, geometric mean, times the brevity penalty.
// Reference lengths are matched per pair by closest length, shorter on
// ties. An order with zero candidate n-grams anywhere in the corpus is
// vacuously perfect; an order with candidates but zero matches scores the
// whole corpus 0 (no smoothing).
double bleu(const std::vector<EvalPair>& pairs, int max_n);

// Mean over pairs of the best per-reference LCS F-measure (beta = 1.2).
double rouge_l(const std::vector<EvalPair>& pairs);

// Whitespace tokenization used by the results-file reader.
std::vector<std::string> split_tokens(const std::string& sentence);

// Tab-separated lines: clip_id<TAB>hypothesis<TAB>reference[<TAB>reference...]
std::vector<EvalPair> read_results_file(const std::string& path);

// key=value lines: pairs, bleu1..bleu4, rouge_l.
std::string metrics_report(const std::vector<EvalPair>& pairs);

}  // namespace semkg::metrics
