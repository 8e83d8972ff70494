#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hybridtext/corpus.h"
#include "hybridtext/hybrid.h"
#include "hybridtext/mining.h"
#include "hybridtext/preprocess.h"
#include "hybridtext/rational.h"

namespace hybridtext {

enum class Method { kHybrid, kBaseline };

std::string_view method_name(Method method);

// One (fraction, seed, method) cell of a sweep.
struct EvalRow {
  Rational fraction;
  std::uint64_t seed = 0;
  Method method = Method::kHybrid;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::vector<std::vector<std::size_t>> confusion;  // [true class][predicted class]
  std::vector<std::string> unclassifiable;          // classes owning no set
  std::string error;                                // non-empty when the cell failed

  bool ok() const { return error.empty(); }
  std::size_t correct() const;
  std::size_t total() const;
  // trace(confusion) / sum(confusion); 0 for a failed or empty cell.
  Rational accuracy() const;
  // Undefined (nullopt) when the class has no test documents.
  std::optional<Rational> recall(std::size_t cls) const;
};

struct EvalReport {
  std::vector<std::string> classes;
  std::vector<EvalRow> rows;
};

struct EvalOptions {
  MatchRule rule;
  bool with_baseline = true;
  bool stratify = false;
  std::size_t threads = 1;
};

// For every fraction and seed: split, train on the train half, classify the
// test half with each method. Training failures become row-level errors.
// Throws on invalid fractions or an unlabeled corpus.
EvalReport evaluate(const Corpus& corpus, std::span<const Rational> fractions,
                    std::span<const std::uint64_t> seeds, const PreprocessConfig& pconf,
                    const MiningConfig& mconf, const EvalOptions& options = {});

// Header: fraction,seed,method,accuracy,recall_<class>...,unclassifiable,error
void write_report_csv(const EvalReport& report, std::ostream& out);
void emit_report(const EvalReport& report, const std::filesystem::path& path);

// Per (fraction, method): successful seed count plus mean/min/max accuracy.
void write_summary_csv(const EvalReport& report, std::ostream& out);

// Full rows including confusion matrices, as JSON.
void write_report_json(const EvalReport& report, std::ostream& out);

}  // namespace hybridtext
