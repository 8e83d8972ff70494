#include "hybridtext/model.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hybridtext/errors.h"

namespace hybridtext {

std::vector<Rational> compute_priors(std::span<const std::size_t> owned_counts) {
  const std::size_t total = std::accumulate(owned_counts.begin(), owned_counts.end(), std::size_t{0});
  if (total == 0) throw std::invalid_argument("priors need at least one owned set");
  std::vector<Rational> priors;
  priors.reserve(owned_counts.size());
  for (auto owned : owned_counts) {
    priors.emplace_back(static_cast<std::int64_t>(owned), static_cast<std::int64_t>(total));
  }
  return priors;
}

Rational estimate(std::int64_t n_k, std::int64_t n_c, std::int64_t vocabulary) {
  if (n_c < 0 || n_k < 0 || vocabulary < 1 || n_k > n_c) {
    throw std::invalid_argument("estimate requires 0 <= n_k <= n_c and vocabulary >= 1");
  }
  return Rational(n_k + 1, n_c + vocabulary);
}

namespace {

std::vector<std::size_t> count_owners(std::span<const ItemsetCount> sets, std::size_t classes) {
  std::vector<std::size_t> owned(classes, 0);
  for (const auto& s : sets) ++owned[assign_owner(s)];
  return owned;
}

std::vector<std::int64_t> sum_class_totals(std::span<const ItemsetCount> sets,
                                           std::size_t classes) {
  std::vector<std::int64_t> totals(classes, 0);
  for (const auto& s : sets) {
    for (std::size_t c = 0; c < classes; ++c) {
      totals[c] += static_cast<std::int64_t>(s.per_class_count[c]);
    }
  }
  return totals;
}

}  // namespace

Model assemble_model(std::vector<std::string> classes, std::vector<ItemsetCount> sets,
                     PreprocessConfig pconf, MiningConfig mconf) {
  if (sets.empty()) {
    throw TrainingError("no maximal word sets were mined; lower the minimum support");
  }
  Model model;
  model.classes = std::move(classes);
  model.sets = std::move(sets);
  model.preprocess = std::move(pconf);
  model.mining = std::move(mconf);

  const std::size_t k = model.classes.size();
  for (const auto& s : model.sets) {
    if (s.per_class_count.size() != k) {
      throw std::invalid_argument("itemset class counts do not match the class registry");
    }
  }
  const auto owned = count_owners(model.sets, k);
  model.priors = compute_priors(owned);
  model.class_totals = sum_class_totals(model.sets, k);

  const auto vocabulary = static_cast<std::int64_t>(model.sets.size());
  model.table.reserve(model.sets.size());
  for (const auto& s : model.sets) {
    std::vector<Rational> row;
    row.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
      row.push_back(estimate(static_cast<std::int64_t>(s.per_class_count[c]),
                             model.class_totals[c], vocabulary));
    }
    model.table.push_back(std::move(row));
  }
  return model;
}

std::vector<Transaction> to_transactions(const Corpus& corpus, const PreprocessConfig& config) {
  std::vector<Transaction> transactions;
  transactions.reserve(corpus.size());
  for (const auto& doc : corpus.documents()) {
    const KeywordSet kw = extract_keywords(doc.id, doc.text, config);
    transactions.push_back({corpus.label_index(doc), {kw.keywords.begin(), kw.keywords.end()}});
  }
  return transactions;
}

Model build_model(const Corpus& train, const PreprocessConfig& pconf, const MiningConfig& mconf) {
  pconf.validate();
  mconf.validate();
  const auto& classes = train.classes();
  if (classes.size() < 2) throw TrainingError("training needs at least two classes");

  const auto transactions = to_transactions(train, pconf);
  std::vector<std::size_t> docs(classes.size(), 0);
  std::vector<std::size_t> keywords(classes.size(), 0);
  for (const auto& t : transactions) {
    ++docs[t.label];
    keywords[t.label] += t.items.size();
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (docs[c] == 0) throw TrainingError("class '" + classes[c] + "' has no training documents");
    if (keywords[c] == 0) {
      throw TrainingError("documents of class '" + classes[c] +
                          "' yield no keywords; lower the minimum keyword frequency");
    }
  }

  auto sets = mine_maximal(transactions, classes.size(), mconf);
  return assemble_model(classes, std::move(sets), pconf, mconf);
}

std::vector<std::size_t> owned_set_counts(const Model& model) {
  return count_owners(model.sets, model.class_count());
}

std::size_t probability_owner(const Model& model, std::size_t set) {
  const auto& row = model.table.at(set);
  std::size_t best = 0;
  for (std::size_t c = 1; c < row.size(); ++c) {
    if (row[c] > row[best]) best = c;
  }
  return best;
}

std::vector<std::string> unclassifiable_classes(const Model& model) {
  std::vector<bool> owns(model.class_count(), false);
  for (std::size_t s = 0; s < model.set_count(); ++s) owns[probability_owner(model, s)] = true;
  std::vector<std::string> out;
  for (std::size_t c = 0; c < model.class_count(); ++c) {
    if (!owns[c]) out.push_back(model.classes[c]);
  }
  return out;
}

void Model::validate() const {
  const std::size_t k = classes.size();
  if (k == 0) throw ModelFormatError("model has no classes");
  if (std::set<std::string>(classes.begin(), classes.end()).size() != k) {
    throw ModelFormatError("model class registry has duplicates");
  }
  if (sets.empty()) throw ModelFormatError("model has no word sets");
  for (const auto& s : sets) {
    if (s.items.empty() || !std::is_sorted(s.items.begin(), s.items.end()) ||
        std::adjacent_find(s.items.begin(), s.items.end()) != s.items.end()) {
      throw ModelFormatError("word set items must be sorted, unique and non-empty");
    }
    if (s.per_class_count.size() != k) throw ModelFormatError("word set class counts mis-sized");
    const auto sum = std::accumulate(s.per_class_count.begin(), s.per_class_count.end(),
                                     std::size_t{0});
    if (sum != s.support_count || sum == 0) {
      throw ModelFormatError("word set '" + join_items(s.items) +
                             "' support does not equal its class counts");
    }
  }
  if (priors != compute_priors(count_owners(sets, k))) {
    throw ModelFormatError("priors are inconsistent with set ownership");
  }
  if (class_totals != sum_class_totals(sets, k)) {
    throw ModelFormatError("class totals are inconsistent with set counts");
  }
  if (table.size() != sets.size()) throw ModelFormatError("probability table has wrong row count");
  const auto vocabulary = static_cast<std::int64_t>(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (table[s].size() != k) throw ModelFormatError("probability table has wrong column count");
    for (std::size_t c = 0; c < k; ++c) {
      const Rational expected = estimate(static_cast<std::int64_t>(sets[s].per_class_count[c]),
                                         class_totals[c], vocabulary);
      if (table[s][c] != expected) {
        throw ModelFormatError("probability table entry for '" + join_items(sets[s].items) +
                               "' does not match its counts");
      }
    }
  }
}

}  // namespace hybridtext
