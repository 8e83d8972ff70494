#include "hybridtext/mining.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>

#include "hybridtext/errors.h"

namespace hybridtext {

void MiningConfig::validate() const {
  if (min_support <= 0 || min_support > 1) throw ConfigError("min support must lie in (0, 1]");
  if (min_confidence <= 0 || min_confidence > 1) {
    throw ConfigError("min confidence must lie in (0, 1]");
  }
  if (max_set_size && *max_set_size == 0) throw ConfigError("max set size must be positive");
}

std::size_t MiningConfig::support_threshold(std::size_t transaction_count) const {
  const std::int64_t t = hybridtext::ceil(min_support * Rational(static_cast<std::int64_t>(transaction_count)));
  return static_cast<std::size_t>(std::max<std::int64_t>(t, 1));
}

namespace {

using ItemIds = std::vector<std::uint32_t>;
using TidList = std::vector<std::uint32_t>;

struct Level {
  std::vector<ItemIds> sets;  // lexicographically sorted
  std::vector<TidList> tids;
};

TidList intersect(const TidList& a, const TidList& b) {
  TidList out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Joins (k-1)-sets sharing their first k-2 items and keeps candidates whose
// every (k-1)-subset is frequent and whose tid-list meets the threshold.
Level next_level(const Level& prev, std::size_t threshold) {
  Level next;
  const std::size_t n = prev.sets.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ItemIds& a = prev.sets[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const ItemIds& b = prev.sets[j];
      if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;
      ItemIds candidate = a;
      candidate.push_back(b.back());

      bool all_subsets_frequent = true;
      ItemIds subset(candidate.size() - 1);
      for (std::size_t drop = 0; drop + 2 < candidate.size() && all_subsets_frequent; ++drop) {
        std::copy(candidate.begin(), candidate.begin() + static_cast<std::ptrdiff_t>(drop),
                  subset.begin());
        std::copy(candidate.begin() + static_cast<std::ptrdiff_t>(drop) + 1, candidate.end(),
                  subset.begin() + static_cast<std::ptrdiff_t>(drop));
        all_subsets_frequent = std::binary_search(prev.sets.begin(), prev.sets.end(), subset);
      }
      if (!all_subsets_frequent) continue;

      TidList tids = intersect(prev.tids[i], prev.tids[j]);
      if (tids.size() >= threshold) {
        next.sets.push_back(std::move(candidate));
        next.tids.push_back(std::move(tids));
      }
    }
  }
  return next;
}

}  // namespace

std::vector<ItemsetCount> apriori(std::span<const Transaction> transactions,
                                  std::size_t class_count, const MiningConfig& config) {
  if (transactions.empty()) throw std::invalid_argument("apriori needs at least one transaction");
  config.validate();

  std::vector<std::string> vocabulary;
  for (const auto& t : transactions) {
    if (t.label >= class_count) throw std::invalid_argument("transaction label out of range");
    vocabulary.insert(vocabulary.end(), t.items.begin(), t.items.end());
  }
  std::sort(vocabulary.begin(), vocabulary.end());
  vocabulary.erase(std::unique(vocabulary.begin(), vocabulary.end()), vocabulary.end());

  std::vector<TidList> item_tids(vocabulary.size());
  for (std::size_t tid = 0; tid < transactions.size(); ++tid) {
    ItemIds ids;
    for (const auto& item : transactions[tid].items) {
      ids.push_back(static_cast<std::uint32_t>(
          std::lower_bound(vocabulary.begin(), vocabulary.end(), item) - vocabulary.begin()));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (auto id : ids) item_tids[id].push_back(static_cast<std::uint32_t>(tid));
  }

  const std::size_t threshold = config.support_threshold(transactions.size());
  const std::size_t max_size = config.max_set_size.value_or(SIZE_MAX);

  std::vector<ItemsetCount> result;
  auto emit = [&](const Level& level) {
    for (std::size_t i = 0; i < level.sets.size(); ++i) {
      ItemsetCount out;
      for (auto id : level.sets[i]) out.items.push_back(vocabulary[id]);
      out.support_count = level.tids[i].size();
      out.per_class_count.assign(class_count, 0);
      for (auto tid : level.tids[i]) ++out.per_class_count[transactions[tid].label];
      result.push_back(std::move(out));
    }
  };

  Level level;
  for (std::uint32_t id = 0; id < vocabulary.size(); ++id) {
    if (item_tids[id].size() >= threshold) {
      level.sets.push_back({id});
      level.tids.push_back(std::move(item_tids[id]));
    }
  }
  for (std::size_t k = 1; !level.sets.empty() && k <= max_size; ++k) {
    emit(level);
    if (k == max_size) break;
    level = next_level(level, threshold);
  }
  return result;
}

std::vector<ItemsetCount> maximal_sets(std::span<const ItemsetCount> frequent) {
  // Posting lists let each set be compared only against sets sharing its
  // first item.
  std::map<std::string, std::vector<std::size_t>> postings;
  for (std::size_t i = 0; i < frequent.size(); ++i) {
    for (const auto& item : frequent[i].items) postings[item].push_back(i);
  }

  std::vector<ItemsetCount> result;
  for (std::size_t i = 0; i < frequent.size(); ++i) {
    const auto& items = frequent[i].items;
    if (items.empty()) throw std::invalid_argument("itemset must not be empty");
    bool dominated = false;
    for (std::size_t j : postings[items.front()]) {
      const auto& other = frequent[j].items;
      if (other.size() > items.size() &&
          std::includes(other.begin(), other.end(), items.begin(), items.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.push_back(frequent[i]);
  }
  return result;
}

std::vector<ItemsetCount> mine_maximal(std::span<const Transaction> transactions,
                                       std::size_t class_count, const MiningConfig& config) {
  auto sets = maximal_sets(apriori(transactions, class_count, config));
  if (config.exclude_singletons) {
    std::erase_if(sets, [](const ItemsetCount& s) { return s.items.size() == 1; });
  }
  return sets;
}

std::size_t assign_owner(const ItemsetCount& set) {
  const auto& counts = set.per_class_count;
  auto best = std::max_element(counts.begin(), counts.end());
  if (best == counts.end() || *best == 0) {
    throw std::invalid_argument("itemset '" + join_items(set.items) + "' has no occurrences");
  }
  // max_element returns the first maximum, i.e. the earliest registered class.
  return static_cast<std::size_t>(best - counts.begin());
}

std::vector<AssociationRule> association_rules(std::span<const ItemsetCount> frequent,
                                               const Rational& min_confidence) {
  std::map<std::vector<std::string>, std::size_t> support;
  for (const auto& s : frequent) support.emplace(s.items, s.support_count);

  std::vector<AssociationRule> rules;
  for (const auto& s : frequent) {
    const std::size_t k = s.items.size();
    // Subset enumeration is exponential; wider sets are not expanded.
    if (k < 2 || k > 20) continue;
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      AssociationRule rule;
      for (std::size_t b = 0; b < k; ++b) {
        (mask & (1u << b) ? rule.antecedent : rule.consequent).push_back(s.items[b]);
      }
      auto it = support.find(rule.antecedent);
      if (it == support.end()) {
        throw std::invalid_argument("association rules need the complete frequent-set list");
      }
      rule.support_count = s.support_count;
      rule.confidence = Rational(static_cast<std::int64_t>(s.support_count),
                                 static_cast<std::int64_t>(it->second));
      if (rule.confidence >= min_confidence) rules.push_back(std::move(rule));
    }
  }
  return rules;
}

std::string join_items(std::span<const std::string> items, char sep) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out.push_back(sep);
    out += item;
  }
  return out;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_itemset_csv(std::span<const ItemsetCount> sets, std::span<const std::string> classes,
                       std::ostream& out) {
  out << "items,support_count";
  for (const auto& c : classes) out << ',' << csv_field(c);
  out << '\n';
  for (const auto& s : sets) {
    out << join_items(s.items) << ',' << s.support_count;
    for (auto count : s.per_class_count) out << ',' << count;
    out << '\n';
  }
}

void write_rules_csv(std::span<const AssociationRule> rules, std::ostream& out) {
  out << "antecedent,consequent,support_count,confidence\n";
  for (const auto& r : rules) {
    out << join_items(r.antecedent) << ',' << join_items(r.consequent) << ',' << r.support_count
        << ',' << to_decimal_string(r.confidence, 6) << '\n';
  }
}

}  // namespace hybridtext
