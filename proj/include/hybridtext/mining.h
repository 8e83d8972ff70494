#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hybridtext/rational.h"

namespace hybridtext {

// One labeled transaction: the keyword set of a training document.
struct Transaction {
  std::size_t label = 0;            // index into the class registry
  std::vector<std::string> items;   // normalized to sorted, unique by the miner
};

struct ItemsetCount {
  std::vector<std::string> items;          // sorted, duplicate-free, non-empty
  std::size_t support_count = 0;           // transactions containing every item
  std::vector<std::size_t> per_class_count;  // aligned with the class registry

  bool operator==(const ItemsetCount&) const = default;
};

struct MiningConfig {
  Rational min_support{1, 20};
  // Only used for association-rule debug output; classification consumes
  // itemsets, not rules.
  Rational min_confidence{3, 4};
  std::optional<std::size_t> max_set_size;
  bool exclude_singletons = false;

  void validate() const;
  // ceil(min_support * transaction_count), never below 1.
  std::size_t support_threshold(std::size_t transaction_count) const;
};

struct AssociationRule {
  std::vector<std::string> antecedent;
  std::vector<std::string> consequent;
  std::size_t support_count = 0;
  Rational confidence;
};

// Levelwise Apriori. Returns every itemset meeting the support threshold,
// ordered by (size, lexicographic items). Throws std::invalid_argument on an
// empty transaction list or a label outside [0, class_count).
std::vector<ItemsetCount> apriori(std::span<const Transaction> transactions,
                                  std::size_t class_count, const MiningConfig& config);

// Keeps the itemsets that are not a proper subset of another input itemset,
// in input order.
std::vector<ItemsetCount> maximal_sets(std::span<const ItemsetCount> frequent);

// Full mining pipeline: apriori, maximal reduction, optional singleton
// exclusion.
std::vector<ItemsetCount> mine_maximal(std::span<const Transaction> transactions,
                                       std::size_t class_count, const MiningConfig& config);

// Class with the largest occurrence count; earliest registered wins ties.
std::size_t assign_owner(const ItemsetCount& set);

// Rules X -> Y with X ∪ Y frequent and confidence >= min_confidence.
// `frequent` must be the complete (downward closed) apriori output.
std::vector<AssociationRule> association_rules(std::span<const ItemsetCount> frequent,
                                               const Rational& min_confidence);

// Table layout: items (space-joined), support_count, one count per class.
void write_itemset_csv(std::span<const ItemsetCount> sets, std::span<const std::string> classes,
                       std::ostream& out);
void write_rules_csv(std::span<const AssociationRule> rules, std::ostream& out);

std::string join_items(std::span<const std::string> items, char sep = ' ');

// RFC 4180 quoting when needed.
std::string csv_field(const std::string& value);

}  // namespace hybridtext
