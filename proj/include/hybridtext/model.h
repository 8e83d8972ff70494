#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hybridtext/corpus.h"
#include "hybridtext/mining.h"
#include "hybridtext/preprocess.h"
#include "hybridtext/rational.h"

namespace hybridtext {

// Trained classifier state: maximal word sets with their per-class
// occurrence counts, class priors, and the smoothed probability table.
struct Model {
  static constexpr int kFormatVersion = 1;

  std::vector<std::string> classes;
  std::vector<ItemsetCount> sets;
  std::vector<Rational> priors;                // per class
  std::vector<std::int64_t> class_totals;      // n_c: summed set occurrences in class c
  std::vector<std::vector<Rational>> table;    // [set][class]
  PreprocessConfig preprocess;
  MiningConfig mining;

  std::size_t set_count() const { return sets.size(); }
  std::size_t class_count() const { return classes.size(); }
  const Rational& probability(std::size_t set, std::size_t cls) const { return table[set][cls]; }

  // Throws ModelFormatError when any structural or arithmetic invariant fails.
  void validate() const;
};

// P(c) = owned(c) / m. Throws std::invalid_argument when m == 0.
std::vector<Rational> compute_priors(std::span<const std::size_t> owned_counts);

// Laplace-smoothed estimate (n_k + 1) / (n_c + vocabulary).
Rational estimate(std::int64_t n_k, std::int64_t n_c, std::int64_t vocabulary);

// Builds priors, class totals and the table from mined sets. Throws
// TrainingError when `sets` is empty.
Model assemble_model(std::vector<std::string> classes, std::vector<ItemsetCount> sets,
                     PreprocessConfig pconf, MiningConfig mconf);

std::vector<Transaction> to_transactions(const Corpus& corpus, const PreprocessConfig& config);

// extract_keywords -> apriori -> maximal_sets -> priors -> table.
Model build_model(const Corpus& train, const PreprocessConfig& pconf, const MiningConfig& mconf);

// Number of sets each class owns by occurrence count (the prior numerators).
std::vector<std::size_t> owned_set_counts(const Model& model);

// Class with the highest table probability for `set`; earliest registered
// class wins ties.
std::size_t probability_owner(const Model& model, std::size_t set);

// Classes that own no set under probability_owner. The hybrid scorer can
// never award such a class a positive term.
std::vector<std::string> unclassifiable_classes(const Model& model);

}  // namespace hybridtext
