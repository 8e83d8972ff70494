#include "hybridtext/hybrid.h"

#include <stdexcept>

#include "hybridtext/errors.h"

namespace hybridtext {

void MatchRule::validate() const {
  if (threshold <= 0 || threshold > 1) throw ConfigError("match threshold must lie in (0, 1]");
}

Rational match_fraction(std::span<const std::string> items, const KeywordSet& keywords) {
  if (items.empty()) throw std::invalid_argument("cannot match an empty itemset");
  std::int64_t hits = 0;
  for (const auto& item : items) hits += keywords.contains(item) ? 1 : 0;
  return Rational(hits, static_cast<std::int64_t>(items.size()));
}

bool is_matched(std::span<const std::string> items, const KeywordSet& keywords,
                const MatchRule& rule) {
  return match_fraction(items, keywords) >= rule.threshold;
}

namespace {

struct SetEvidence {
  std::size_t owner;
  bool matched;
};

std::vector<SetEvidence> gather_evidence(const KeywordSet& keywords, const Model& model,
                                         const MatchRule& rule) {
  if (model.set_count() == 0) throw std::invalid_argument("model has no word sets");
  std::vector<SetEvidence> evidence;
  evidence.reserve(model.set_count());
  for (std::size_t s = 0; s < model.set_count(); ++s) {
    evidence.push_back({probability_owner(model, s), is_matched(model.sets[s].items, keywords, rule)});
  }
  return evidence;
}

Rational percentage(std::size_t part, std::size_t whole) {
  if (whole == 0) return Rational(0);
  return Rational(100 * static_cast<std::int64_t>(part), static_cast<std::int64_t>(whole));
}

ClassScore tally(std::span<const SetEvidence> evidence, const Model& model, std::size_t cls) {
  ClassScore score;
  score.label = model.classes.at(cls);
  for (const auto& e : evidence) {
    if (e.owner == cls) {
      ++score.pval;
      if (e.matched) ++score.p;
    } else {
      ++score.nval;
      if (!e.matched) ++score.n;
    }
  }
  score.prior = model.priors.at(cls);
  score.positive_term = percentage(score.p, score.pval);
  score.negative_term = percentage(score.n, score.nval);
  score.total = score.positive_term + score.negative_term + score.prior;
  return score;
}

}  // namespace

ClassScore score_class(const KeywordSet& keywords, const Model& model, std::size_t class_index,
                       const MatchRule& rule) {
  return tally(gather_evidence(keywords, model, rule), model, class_index);
}

Classification classify(const KeywordSet& keywords, const Model& model, const MatchRule& rule) {
  const auto evidence = gather_evidence(keywords, model, rule);
  Classification result;
  for (std::size_t c = 0; c < model.class_count(); ++c) {
    result.scores.push_back(tally(evidence, model, c));
    if (result.scores[c].total > result.scores[result.class_index].total) result.class_index = c;
  }
  result.label = model.classes.at(result.class_index);
  return result;
}

}  // namespace hybridtext
