#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hybridtext/hybrid.h"
#include "hybridtext/model.h"
#include "hybridtext/preprocess.h"

namespace hybridtext {

struct BaselineResult {
  std::size_t class_index = 0;
  std::string label;
  std::vector<double> log_scores;  // registry order; -inf for a zero prior
};

// Naive Bayes restricted to matched sets:
//   score(c) = log P(c) + sum over matched s of log P(s | c)
// Unmatched sets contribute nothing. Scores within kLogTieTolerance of the
// best are treated as ties and resolved by registration order.
BaselineResult classify_matched_nb(const KeywordSet& keywords, const Model& model,
                                   const MatchRule& rule);

inline constexpr double kLogTieTolerance = 1e-9;

}  // namespace hybridtext
