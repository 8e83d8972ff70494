#include "hybridtext/baseline.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hybridtext {

BaselineResult classify_matched_nb(const KeywordSet& keywords, const Model& model,
                                   const MatchRule& rule) {
  const std::size_t k = model.class_count();
  BaselineResult result;
  result.log_scores.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    result.log_scores[c] = model.priors.at(c).numerator() == 0 ? -std::numeric_limits<double>::infinity()
                                                   : std::log(to_double(model.priors[c]));
  }
  for (std::size_t s = 0; s < model.set_count(); ++s) {
    if (!is_matched(model.sets[s].items, keywords, rule)) continue;
    for (std::size_t c = 0; c < k; ++c) {
      result.log_scores[c] += std::log(to_double(model.table[s][c]));
    }
  }

  // Strict improvement beyond the tolerance is needed to displace an earlier
  // class, so rounding noise between equal products cannot flip a tie.
  for (std::size_t c = 1; c < k; ++c) {
    const double best = result.log_scores[result.class_index];
    const double margin = std::isinf(best) ? 0.0 : kLogTieTolerance * std::max(1.0, std::abs(best));
    if (result.log_scores[c] > best + margin) {
      result.class_index = c;
    }
  }
  result.label = model.classes.at(result.class_index);
  return result;
}

}  // namespace hybridtext
