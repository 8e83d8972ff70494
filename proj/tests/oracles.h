#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the mining, model, hybrid or baseline code paths;
// each oracle recomputes its answer from first principles by brute force.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigRational = boost::multiprecision::cpp_rational;
using Items = std::vector<std::string>;

struct Txn {
  std::size_t label;
  std::set<std::string> items;
};

inline bool contains_all(const std::set<std::string>& haystack, const Items& needles) {
  return std::all_of(needles.begin(), needles.end(),
                     [&](const std::string& w) { return haystack.contains(w); });
}

// Per-class occurrence counts of every itemset meeting `threshold`, found by
// enumerating all 2^|vocabulary| subsets.
inline std::map<Items, std::vector<std::size_t>> frequent_itemsets(const std::vector<Txn>& txns,
                                                                   std::size_t class_count,
                                                                   std::size_t threshold) {
  std::set<std::string> vocab_set;
  for (const auto& t : txns) vocab_set.insert(t.items.begin(), t.items.end());
  const Items vocab(vocab_set.begin(), vocab_set.end());
  if (vocab.size() > 22) throw std::invalid_argument("vocabulary too large for enumeration");

  std::map<Items, std::vector<std::size_t>> result;
  for (unsigned long mask = 1; mask < (1ul << vocab.size()); ++mask) {
    Items subset;
    for (std::size_t b = 0; b < vocab.size(); ++b) {
      if (mask & (1ul << b)) subset.push_back(vocab[b]);
    }
    std::vector<std::size_t> counts(class_count, 0);
    std::size_t support = 0;
    for (const auto& t : txns) {
      if (contains_all(t.items, subset)) {
        ++counts[t.label];
        ++support;
      }
    }
    if (support >= threshold) result.emplace(std::move(subset), std::move(counts));
  }
  return result;
}

// Sets from `frequent` with no proper superset in `frequent`.
inline std::vector<Items> maximal(const std::map<Items, std::vector<std::size_t>>& frequent) {
  std::vector<Items> out;
  for (const auto& [items, counts] : frequent) {
    bool dominated = false;
    for (const auto& [other, other_counts] : frequent) {
      if (other.size() > items.size() &&
          std::includes(other.begin(), other.end(), items.begin(), items.end())) {
        dominated = true;
      }
    }
    if (!dominated) out.push_back(items);
  }
  return out;
}

// Probability table and priors computed straight from the training
// transactions: n_k = class-c documents containing the set, n_c = sum of n_k
// over the sets, V = number of sets, prior = share of sets whose largest
// count falls in class c (first class on ties).
struct Table {
  std::vector<std::vector<BigRational>> prob;  // [set][class]
  std::vector<BigRational> priors;
};

inline Table smoothed_table(const std::vector<Items>& sets, const std::vector<Txn>& train,
                            std::size_t class_count) {
  std::vector<std::vector<long>> nk(sets.size(), std::vector<long>(class_count, 0));
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (const auto& t : train) {
      if (contains_all(t.items, sets[s])) ++nk[s][t.label];
    }
  }
  std::vector<long> nc(class_count, 0);
  std::vector<long> owned(class_count, 0);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    std::size_t owner = 0;
    for (std::size_t c = 0; c < class_count; ++c) {
      nc[c] += nk[s][c];
      if (nk[s][c] > nk[s][owner]) owner = c;
    }
    ++owned[owner];
  }
  Table table;
  const long V = static_cast<long>(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    std::vector<BigRational> row;
    for (std::size_t c = 0; c < class_count; ++c) row.emplace_back(BigRational(nk[s][c] + 1) / (nc[c] + V));
    table.prob.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < class_count; ++c) table.priors.emplace_back(BigRational(owned[c]) / V);
  return table;
}

struct HybridTrace {
  std::vector<std::size_t> pval, nval, p, n;
  std::vector<BigRational> totals;
  std::size_t winner = 0;
};

// The classification procedure executed step by step:
//   for each class i: zero pval, nval, p, n
//     for each set s:
//       class i has the maximum probability for s -> pval++ else nval++
//       if at least `threshold` of s is in the keywords:
//         class i is the maximum -> p++
//       else:
//         class i is not the maximum -> n++
//     total = 100 p / pval + 100 n / nval + prior(i)
//   answer = class with the maximum total
// "Maximum" ties resolve to the first class in registry order; a percentage
// with a zero denominator is 0.
inline HybridTrace hybrid_steps(const std::vector<Items>& sets, const Table& table,
                                const std::set<std::string>& keywords, const BigRational& threshold) {
  const std::size_t classes = table.priors.size();
  HybridTrace trace;
  for (std::size_t i = 0; i < classes; ++i) {
    std::size_t pval = 0, nval = 0, p = 0, n = 0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      std::size_t argmax = 0;
      for (std::size_t c = 1; c < classes; ++c) {
        if (table.prob[s][c] > table.prob[s][argmax]) argmax = c;
      }
      const bool is_max = argmax == i;
      if (is_max) ++pval; else ++nval;

      long hits = 0;
      for (const auto& w : sets[s]) hits += keywords.contains(w) ? 1 : 0;
      const bool half_matched = BigRational(hits) >= threshold * static_cast<long>(sets[s].size());
      if (half_matched) {
        if (is_max) ++p;
      } else {
        if (!is_max) ++n;
      }
    }
    BigRational total = table.priors[i];
    if (pval > 0) total += BigRational(100 * static_cast<long>(p)) / static_cast<long>(pval);
    if (nval > 0) total += BigRational(100 * static_cast<long>(n)) / static_cast<long>(nval);
    trace.pval.push_back(pval);
    trace.nval.push_back(nval);
    trace.p.push_back(p);
    trace.n.push_back(n);
    trace.totals.push_back(total);
  }
  for (std::size_t i = 1; i < classes; ++i) {
    if (trace.totals[i] > trace.totals[trace.winner]) trace.winner = i;
  }
  return trace;
}

// prior(c) * product of table[s][c] over matched sets, exactly; first class
// wins ties.
inline std::size_t matched_nb_argmax(const std::vector<std::vector<BigRational>>& prob,
                                     const std::vector<BigRational>& priors,
                                     const std::vector<bool>& matched) {
  std::vector<BigRational> score = priors;
  for (std::size_t s = 0; s < prob.size(); ++s) {
    if (!matched[s]) continue;
    for (std::size_t c = 0; c < priors.size(); ++c) score[c] *= prob[s][c];
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < score.size(); ++c) {
    if (score[c] > score[best]) best = c;
  }
  return best;
}

}  // namespace oracle
