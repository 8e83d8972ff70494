#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hybridtext/model.h"
#include "hybridtext/preprocess.h"
#include "hybridtext/rational.h"

namespace hybridtext {

// A model set counts as matched when at least `threshold` of its items are
// among the document keywords (inclusive).
struct MatchRule {
  Rational threshold{1, 2};

  void validate() const;
};

// Positive/negative evidence for one class.
//
// A set is positive for the class when the class owns it (highest table
// probability), negative otherwise. `p` counts matched positive sets and `n`
// counts unmatched negative sets. Both percentages use a literal x100 scale
// while the prior stays in [0, 1], so the prior only separates classes whose
// evidence terms tie. A term with a zero denominator is 0.
struct ClassScore {
  std::string label;
  std::size_t pval = 0;
  std::size_t nval = 0;
  std::size_t p = 0;
  std::size_t n = 0;
  Rational prior;
  Rational positive_term;  // 100 * p / pval
  Rational negative_term;  // 100 * n / nval
  Rational total;          // positive_term + negative_term + prior

  bool operator==(const ClassScore&) const = default;
};

struct Classification {
  std::size_t class_index = 0;
  std::string label;
  std::vector<ClassScore> scores;  // registry order
};

// |items ∩ keywords| / |items|. Throws std::invalid_argument on an empty set.
Rational match_fraction(std::span<const std::string> items, const KeywordSet& keywords);
bool is_matched(std::span<const std::string> items, const KeywordSet& keywords,
                const MatchRule& rule);

ClassScore score_class(const KeywordSet& keywords, const Model& model, std::size_t class_index,
                       const MatchRule& rule);

// Scores every class and returns the maximum total; the earliest registered
// class wins ties.
Classification classify(const KeywordSet& keywords, const Model& model, const MatchRule& rule);

}  // namespace hybridtext
