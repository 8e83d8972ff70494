#include "hybridtext/eval.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "hybridtext/baseline.h"
#include "hybridtext/errors.h"
#include "hybridtext/model.h"

namespace hybridtext {

std::string_view method_name(Method method) {
  return method == Method::kHybrid ? "hybrid" : "baseline";
}

std::size_t EvalRow::correct() const {
  std::size_t sum = 0;
  for (std::size_t c = 0; c < confusion.size(); ++c) sum += confusion[c][c];
  return sum;
}

std::size_t EvalRow::total() const {
  std::size_t sum = 0;
  for (const auto& row : confusion) {
    for (auto v : row) sum += v;
  }
  return sum;
}

Rational EvalRow::accuracy() const {
  const std::size_t n = total();
  if (!ok() || n == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(correct()), static_cast<std::int64_t>(n));
}

std::optional<Rational> EvalRow::recall(std::size_t cls) const {
  if (!ok() || cls >= confusion.size()) return std::nullopt;
  std::size_t support = 0;
  for (auto v : confusion[cls]) support += v;
  if (support == 0) return std::nullopt;
  return Rational(static_cast<std::int64_t>(confusion[cls][cls]),
                  static_cast<std::int64_t>(support));
}

namespace {

struct Cell {
  Rational fraction;
  std::uint64_t seed;
};

std::vector<EvalRow> run_cell(const Corpus& corpus, const Cell& cell,
                              const PreprocessConfig& pconf, const MiningConfig& mconf,
                              const EvalOptions& options) {
  std::vector<Method> methods{Method::kHybrid};
  if (options.with_baseline) methods.push_back(Method::kBaseline);

  const std::size_t k = corpus.classes().size();
  const Split split = split_corpus(corpus, cell.fraction, cell.seed, options.stratify);

  std::vector<EvalRow> rows;
  for (auto m : methods) {
    EvalRow row;
    row.fraction = cell.fraction;
    row.seed = cell.seed;
    row.method = m;
    row.train_size = split.train.size();
    row.test_size = split.test.size();
    row.confusion.assign(k, std::vector<std::size_t>(k, 0));
    rows.push_back(std::move(row));
  }

  auto fail_all = [&](const std::string& message) {
    for (auto& row : rows) row.error = message;
    return rows;
  };
  if (split.test.empty()) return fail_all("empty test partition");

  Model model;
  try {
    model = build_model(split.train, pconf, mconf);
  } catch (const TrainingError& e) {
    return fail_all(e.what());
  }
  const auto unclassifiable = unclassifiable_classes(model);

  for (const auto& doc : split.test.documents()) {
    const KeywordSet keywords = extract_keywords(doc.id, doc.text, model.preprocess);
    const std::size_t truth = split.test.label_index(doc);
    for (auto& row : rows) {
      const std::size_t predicted = row.method == Method::kHybrid
                                        ? classify(keywords, model, options.rule).class_index
                                        : classify_matched_nb(keywords, model, options.rule).class_index;
      ++row.confusion[truth][predicted];
    }
  }
  for (auto& row : rows) row.unclassifiable = unclassifiable;
  return rows;
}

}  // namespace

EvalReport evaluate(const Corpus& corpus, std::span<const Rational> fractions,
                    std::span<const std::uint64_t> seeds, const PreprocessConfig& pconf,
                    const MiningConfig& mconf, const EvalOptions& options) {
  for (const auto& f : fractions) {
    if (f <= 0 || f >= 1) throw ConfigError("training fractions must lie strictly between 0 and 1");
  }
  if (!corpus.fully_labeled()) throw CorpusError("evaluation needs a fully labeled corpus");
  options.rule.validate();
  pconf.validate();
  mconf.validate();

  std::vector<Cell> cells;
  for (const auto& f : fractions) {
    for (auto seed : seeds) cells.push_back({f, seed});
  }

  // Cells are independent; results land in fixed slots so scheduling never
  // affects the report.
  std::vector<std::vector<EvalRow>> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      results[i] = run_cell(corpus, cells[i], pconf, mconf, options);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(cells.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  EvalReport report;
  report.classes = corpus.classes();
  for (auto& cell_rows : results) {
    for (auto& row : cell_rows) report.rows.push_back(std::move(row));
  }
  return report;
}

void write_report_csv(const EvalReport& report, std::ostream& out) {
  out << "fraction,seed,method,accuracy";
  for (const auto& c : report.classes) out << ',' << csv_field("recall_" + c);
  out << ",unclassifiable,error\n";
  for (const auto& row : report.rows) {
    out << to_decimal_string(row.fraction, 6, true) << ',' << row.seed << ','
        << method_name(row.method) << ',';
    if (row.ok()) out << to_decimal_string(row.accuracy(), 6);
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
      out << ',';
      if (auto r = row.recall(c)) out << to_decimal_string(*r, 6);
    }
    std::string unclassifiable;
    for (const auto& name : row.unclassifiable) {
      unclassifiable += (unclassifiable.empty() ? "" : ";") + name;
    }
    out << ',' << csv_field(unclassifiable) << ',' << csv_field(row.error) << '\n';
  }
}

void emit_report(const EvalReport& report, const std::filesystem::path& path) {
  if (report.rows.empty()) throw std::invalid_argument("cannot emit an empty report");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write report to '" + path.string() + "'");
  write_report_csv(report, out);
  if (!out) throw ConfigError("cannot write report to '" + path.string() + "'");
}

void write_summary_csv(const EvalReport& report, std::ostream& out) {
  struct Agg {
    std::size_t seeds = 0;
    Rational sum, min, max;
  };
  std::vector<std::pair<Rational, Method>> order;
  std::map<std::pair<Rational, int>, Agg> groups;
  for (const auto& row : report.rows) {
    const auto key = std::make_pair(row.fraction, static_cast<int>(row.method));
    if (!groups.contains(key)) order.emplace_back(row.fraction, row.method);
    Agg& agg = groups[key];
    if (!row.ok()) continue;
    const Rational acc = row.accuracy();
    agg.min = agg.seeds == 0 ? acc : std::min(agg.min, acc);
    agg.max = agg.seeds == 0 ? acc : std::max(agg.max, acc);
    agg.sum += acc;
    ++agg.seeds;
  }
  out << "fraction,method,seeds,mean_accuracy,min_accuracy,max_accuracy\n";
  for (const auto& [fraction, method] : order) {
    const Agg& agg = groups[{fraction, static_cast<int>(method)}];
    out << to_decimal_string(fraction, 6, true) << ',' << method_name(method) << ',' << agg.seeds;
    if (agg.seeds > 0) {
      out << ',' << to_decimal_string(agg.sum / Rational(static_cast<std::int64_t>(agg.seeds)), 6)
          << ',' << to_decimal_string(agg.min, 6) << ',' << to_decimal_string(agg.max, 6) << '\n';
    } else {
      out << ",,,\n";
    }
  }
}

void write_report_json(const EvalReport& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["classes"] = report.classes;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json j;
    j["fraction"] = to_fraction_string(row.fraction);
    j["seed"] = row.seed;
    j["method"] = method_name(row.method);
    j["train_size"] = row.train_size;
    j["test_size"] = row.test_size;
    j["correct"] = row.correct();
    j["total"] = row.total();
    j["accuracy"] = to_fraction_string(row.accuracy());
    j["confusion"] = row.confusion;
    j["unclassifiable_classes"] = row.unclassifiable;
    if (!row.ok()) j["error"] = row.error;
    doc["rows"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace hybridtext
