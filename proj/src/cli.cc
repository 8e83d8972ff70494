#include "hybridtext/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hybridtext/baseline.h"
#include "hybridtext/corpus.h"
#include "hybridtext/errors.h"
#include "hybridtext/eval.h"
#include "hybridtext/hybrid.h"
#include "hybridtext/mining.h"
#include "hybridtext/model.h"
#include "hybridtext/model_io.h"
#include "hybridtext/preprocess.h"
#include "hybridtext/synthetic.h"

namespace hybridtext {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const auto part = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    if (!part.empty()) parts.emplace_back(part);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ConfigError("invalid seed '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ConfigError("seed '" + text + "' is out of range");
  }
}

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(flag + ": " + e.what());
  }
}

// Flags shared by commands that preprocess and mine a corpus.
struct PipelineFlags {
  std::string support = "0.05";
  std::string confidence = "0.75";
  std::size_t max_set_size = 0;
  bool exclude_singletons = false;
  std::size_t min_keyword_freq = 2;
  std::size_t min_token_length = 2;
  bool no_plural_folding = false;
  std::string stopwords;

  void add_to(CLI::App& app) {
    app.add_option("--support", support, "Minimum itemset support as a fraction of documents")
        ->capture_default_str();
    app.add_option("--confidence", confidence, "Minimum rule confidence (rule output only)")
        ->capture_default_str();
    app.add_option("--max-set-size", max_set_size, "Largest itemset size to mine (0 = no cap)")
        ->capture_default_str();
    app.add_flag("--exclude-singletons", exclude_singletons, "Drop maximal sets of one word");
    app.add_option("--min-keyword-freq", min_keyword_freq,
                   "Occurrences within a document needed to keep a word")
        ->capture_default_str();
    app.add_option("--min-token-length", min_token_length, "Drop shorter tokens (0 = keep all)")
        ->capture_default_str();
    app.add_flag("--no-plural-folding", no_plural_folding, "Keep singular and plural distinct");
    app.add_option("--stopwords", stopwords, "Stopword file replacing the built-in list");
  }

  PreprocessConfig preprocess() const {
    PreprocessConfig config;
    if (!stopwords.empty()) config.stopwords = load_stopwords(stopwords);
    config.min_in_doc_frequency = min_keyword_freq;
    config.min_token_length = min_token_length;
    config.plural_folding = !no_plural_folding;
    config.validate();
    return config;
  }

  MiningConfig mining() const {
    MiningConfig config;
    config.min_support = parse_flag_rational("--support", support);
    config.min_confidence = parse_flag_rational("--confidence", confidence);
    if (max_set_size > 0) config.max_set_size = max_set_size;
    config.exclude_singletons = exclude_singletons;
    config.validate();
    return config;
  }
};

MatchRule match_rule(const std::string& threshold) {
  MatchRule rule{parse_flag_rational("--match-threshold", threshold)};
  rule.validate();
  return rule;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot write '" + path + "'");
  file << content;
  if (!file) throw ConfigError("cannot write '" + path + "'");
}

// --- train ----------------------------------------------------------------

struct TrainCommand {
  std::string corpus;
  std::string model_out;
  std::string fraction;
  std::uint64_t seed = 1;
  bool stratify = false;
  PipelineFlags flags;

  void add_to(CLI::App& app) {
    app.add_option("corpus", corpus, "Corpus directory or manifest")->required();
    app.add_option("-o,--model", model_out, "Model file to write")->required();
    app.add_option("--train-fraction", fraction,
                   "Train on this fraction of a seeded split instead of the whole corpus");
    app.add_option("--seed", seed, "Split seed for --train-fraction")->capture_default_str();
    app.add_flag("--stratify", stratify, "Split per class");
    flags.add_to(app);
  }

  int run(std::ostream& out) const {
    const auto pconf = flags.preprocess();
    const auto mconf = flags.mining();
    std::optional<Rational> split_fraction;
    if (!fraction.empty()) {
      split_fraction = parse_flag_rational("--train-fraction", fraction);
      if (*split_fraction <= 0 || *split_fraction >= 1) {
        throw ConfigError("--train-fraction must lie strictly between 0 and 1");
      }
    }
    Corpus source = load_corpus(corpus);
    if (split_fraction) source = split_corpus(source, *split_fraction, seed, stratify).train;

    const Model model = build_model(source, pconf, mconf);
    save_model(model, model_out);

    const auto owned = owned_set_counts(model);
    out << "documents: " << source.size() << '\n';
    out << "sets: " << model.set_count() << '\n';
    out << "class\towned\tprior\n";
    for (std::size_t c = 0; c < model.class_count(); ++c) {
      out << model.classes[c] << '\t' << owned[c] << '\t' << to_decimal_string(model.priors[c], 6)
          << '\n';
    }
    const auto unclassifiable = unclassifiable_classes(model);
    if (!unclassifiable.empty()) {
      out << "unclassifiable:";
      for (const auto& c : unclassifiable) out << ' ' << c;
      out << '\n';
    }
    out << "model: " << model_out << '\n';
    return kExitOk;
  }
};

// --- classify ---------------------------------------------------------------

struct ClassifyCommand {
  std::string model_path;
  std::string input;
  std::string method = "hybrid";
  std::string threshold = "0.5";
  bool explain = false;
  bool json = false;
  bool manifest = false;

  void add_to(CLI::App& app) {
    app.add_option("model", model_path, "Trained model file")->required();
    app.add_option("input", input,
                   "Document file, manifest, corpus directory, or '-' for standard input");
    app.add_option("--method", method, "Scoring method")
        ->check(CLI::IsMember({"hybrid", "baseline"}))
        ->capture_default_str();
    app.add_option("--match-threshold", threshold, "Fraction of a set's words that must match")
        ->capture_default_str();
    app.add_flag("--explain", explain, "Print the per-class score breakdown");
    app.add_flag("--json", json, "Emit one JSON object per document");
    app.add_flag("--manifest", manifest, "Treat the input file as a JSON-lines manifest");
  }

  std::vector<Document> read_documents(std::istream& in) const {
    if (input.empty() || input == "-") {
      std::ostringstream buf;
      buf << in.rdbuf();
      return {Document{"stdin", std::nullopt, buf.str()}};
    }
    const fs::path path(input);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      const bool has_classes = std::any_of(fs::directory_iterator(path), fs::directory_iterator(),
                                           [](const fs::directory_entry& e) { return e.is_directory(); });
      if (has_classes) return load_corpus(path).documents();
      // A flat folder of unlabeled .txt files, in name order.
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(path)) {
        if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      std::vector<Document> docs;
      for (const auto& f : files) docs.push_back(read_file(f));
      return docs;
    }
    if (manifest || path.extension() == ".jsonl") return load_corpus(path).documents();
    return {read_file(path)};
  }

  static Document read_file(const fs::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot read input '" + path.string() + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return Document{path.stem().string(), std::nullopt, buf.str()};
  }

  int run(std::istream& in, std::ostream& out) const {
    const MatchRule rule = match_rule(threshold);
    const Model model = load_model(model_path);
    const bool hybrid = method == "hybrid";

    for (const auto& doc : read_documents(in)) {
      const KeywordSet keywords = extract_keywords(doc.id, doc.text, model.preprocess);
      if (hybrid) {
        report(doc.id, classify(keywords, model, rule), out);
      } else {
        report(doc.id, classify_matched_nb(keywords, model, rule), model, out);
      }
    }
    return kExitOk;
  }

  void report(const std::string& id, const Classification& result, std::ostream& out) const {
    if (json) {
      nlohmann::ordered_json j;
      j["id"] = id;
      j["method"] = "hybrid";
      j["predicted"] = result.label;
      j["scores"] = nlohmann::ordered_json::array();
      for (const auto& s : result.scores) {
        j["scores"].push_back({{"class", s.label},
                               {"pval", s.pval},
                               {"nval", s.nval},
                               {"p", s.p},
                               {"n", s.n},
                               {"positive_term", to_fraction_string(s.positive_term)},
                               {"negative_term", to_fraction_string(s.negative_term)},
                               {"prior", to_fraction_string(s.prior)},
                               {"total", to_fraction_string(s.total)},
                               {"total_decimal", to_decimal_string(s.total, 3)}});
      }
      out << j.dump() << '\n';
      return;
    }
    out << id << '\t' << result.label << '\n';
    if (!explain) return;
    for (const auto& s : result.scores) {
      out << "  " << s.label << "\tpval=" << s.pval << " nval=" << s.nval << " p=" << s.p
          << " n=" << s.n << " positive=" << to_decimal_string(s.positive_term, 3)
          << " negative=" << to_decimal_string(s.negative_term, 3)
          << " prior=" << to_decimal_string(s.prior, 3)
          << " total=" << to_decimal_string(s.total, 3) << '\n';
    }
  }

  void report(const std::string& id, const BaselineResult& result, const Model& model,
              std::ostream& out) const {
    if (json) {
      nlohmann::ordered_json j;
      j["id"] = id;
      j["method"] = "baseline";
      j["predicted"] = result.label;
      j["log_scores"] = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < model.class_count(); ++c) {
        j["log_scores"][model.classes[c]] = result.log_scores[c];
      }
      out << j.dump() << '\n';
      return;
    }
    out << id << '\t' << result.label << '\n';
    if (!explain) return;
    std::ostringstream line;
    line.precision(9);
    for (std::size_t c = 0; c < model.class_count(); ++c) {
      line << "  " << model.classes[c] << "\tlog_score=" << result.log_scores[c] << '\n';
    }
    out << line.str();
  }
};

// --- evaluate ---------------------------------------------------------------

struct EvaluateCommand {
  std::string corpus;
  std::string fractions = "0.1,0.2,0.3,0.4,0.5";
  std::string seeds = "1..5";
  std::string threshold = "0.5";
  bool with_baseline = false;
  bool stratify = false;
  std::size_t threads = 1;
  std::string out_path;
  std::string summary_path;
  std::string json_path;
  PipelineFlags flags;

  void add_to(CLI::App& app) {
    app.add_option("corpus", corpus, "Labeled corpus directory or manifest")->required();
    app.add_option("--fractions", fractions, "Comma-separated training fractions")
        ->capture_default_str();
    app.add_option("--seeds", seeds, "Split seeds, e.g. 1..5 or 1,3,9")->capture_default_str();
    app.add_option("--match-threshold", threshold, "Fraction of a set's words that must match")
        ->capture_default_str();
    app.add_flag("--with-baseline", with_baseline, "Also score the matched-set Naive Bayes");
    app.add_flag("--stratify", stratify, "Split per class");
    app.add_option("--threads", threads, "Worker threads for independent cells")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", out_path, "Report CSV (default: standard output)");
    app.add_option("--summary", summary_path, "Per-fraction mean/min/max accuracy CSV");
    app.add_option("--json", json_path, "Full report with confusion matrices as JSON");
    flags.add_to(app);
  }

  int run(std::ostream& out) const {
    const auto pconf = flags.preprocess();
    const auto mconf = flags.mining();
    EvalOptions options;
    options.rule = match_rule(threshold);
    options.with_baseline = with_baseline;
    options.stratify = stratify;
    options.threads = threads;
    const auto fraction_list = parse_fraction_list(fractions);
    const auto seed_list = parse_seed_list(seeds);
    for (const auto& f : fraction_list) {
      if (f <= 0 || f >= 1) throw ConfigError("--fractions values must lie strictly between 0 and 1");
    }

    const Corpus source = load_corpus(corpus);
    const EvalReport report = evaluate(source, fraction_list, seed_list, pconf, mconf, options);

    std::ostringstream csv;
    write_report_csv(report, csv);
    write_output(out_path, csv.str(), out);
    if (!summary_path.empty()) {
      std::ostringstream summary;
      write_summary_csv(report, summary);
      write_output(summary_path, summary.str(), out);
    }
    if (!json_path.empty()) {
      std::ostringstream json;
      write_report_json(report, json);
      write_output(json_path, json.str(), out);
    }
    return kExitOk;
  }
};

// --- mine -------------------------------------------------------------------

struct MineCommand {
  std::string corpus;
  std::string out_path;
  std::string rules_path;
  bool all_frequent = false;
  PipelineFlags flags;

  void add_to(CLI::App& app) {
    app.add_option("corpus", corpus, "Labeled corpus directory or manifest")->required();
    app.add_option("--out", out_path, "Itemset CSV (default: standard output)");
    app.add_option("--rules", rules_path, "Also write association rules meeting --confidence");
    app.add_flag("--all", all_frequent, "List every frequent set, not only maximal ones");
    flags.add_to(app);
  }

  int run(std::ostream& out) const {
    const auto pconf = flags.preprocess();
    const auto mconf = flags.mining();
    const Corpus source = load_corpus(corpus);
    const auto transactions = to_transactions(source, pconf);
    const std::size_t k = source.classes().size();
    const auto frequent = apriori(transactions, k, mconf);

    std::vector<ItemsetCount> rows;
    if (all_frequent) {
      rows = frequent;
    } else {
      rows = maximal_sets(frequent);
      if (mconf.exclude_singletons) {
        std::erase_if(rows, [](const ItemsetCount& s) { return s.items.size() == 1; });
      }
    }
    std::ostringstream csv;
    write_itemset_csv(rows, source.classes(), csv);
    write_output(out_path, csv.str(), out);
    if (!rules_path.empty()) {
      std::ostringstream rules;
      write_rules_csv(association_rules(frequent, mconf.min_confidence), rules);
      write_output(rules_path, rules.str(), out);
    }
    return kExitOk;
  }
};

// --- generate ---------------------------------------------------------------

struct GenerateCommand {
  std::string out_path;
  std::size_t docs_per_class = 20;
  std::size_t classes = 3;
  std::uint64_t seed = 1;
  bool manifest = false;

  void add_to(CLI::App& app) {
    app.add_option("out", out_path, "Output directory (or manifest file with --manifest)")
        ->required();
    app.add_option("--docs-per-class", docs_per_class, "Documents per class")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--classes", classes, "Number of classes (1-4)")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    app.add_option("--seed", seed, "Generator seed")->capture_default_str();
    app.add_flag("--manifest", manifest, "Write a JSON-lines manifest instead of a directory");
  }

  int run(std::ostream& out) const {
    const Corpus corpus = generate_separable_corpus(docs_per_class, seed, classes);
    if (manifest) {
      std::ostringstream buf;
      write_manifest(corpus, buf);
      write_output(out_path, buf.str(), out);
    } else {
      write_corpus_directory(corpus, out_path);
    }
    out << "wrote " << corpus.size() << " documents in " << corpus.classes().size()
        << " classes to " << out_path << '\n';
    return kExitOk;
  }
};

}  // namespace

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  for (const auto& part : split_commas(text)) {
    if (auto dots = part.find(".."); dots != std::string::npos) {
      const auto lo = parse_seed(part.substr(0, dots));
      const auto hi = parse_seed(part.substr(dots + 2));
      if (hi < lo) throw ConfigError("empty seed range '" + part + "'");
      if (hi - lo >= 100000) throw ConfigError("seed range '" + part + "' is too large");
      for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      seeds.push_back(parse_seed(part));
    }
  }
  if (seeds.empty()) throw ConfigError("no seeds given");
  return seeds;
}

std::vector<Rational> parse_fraction_list(std::string_view text) {
  std::vector<Rational> fractions;
  for (const auto& part : split_commas(text)) {
    fractions.push_back(parse_flag_rational("--fractions", part));
  }
  if (fractions.empty()) throw ConfigError("no fractions given");
  return fractions;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Text classification from maximal frequent word sets", "hybridtext"};
  app.set_config("--config", "", "TOML/INI file with option defaults; flags take precedence");
  app.require_subcommand(1);

  TrainCommand train;
  ClassifyCommand classify_cmd;
  EvaluateCommand evaluate_cmd;
  MineCommand mine;
  GenerateCommand generate;
  auto* train_app = app.add_subcommand("train", "Mine word sets and write a model");
  auto* classify_app = app.add_subcommand("classify", "Classify documents with a model");
  auto* evaluate_app = app.add_subcommand("evaluate", "Sweep training fractions and report accuracy");
  auto* mine_app = app.add_subcommand("mine", "Print frequent word sets with per-class counts");
  auto* generate_app = app.add_subcommand("generate", "Write a synthetic separable corpus");
  train.add_to(*train_app);
  classify_cmd.add_to(*classify_app);
  evaluate_cmd.add_to(*evaluate_app);
  mine.add_to(*mine_app);
  generate.add_to(*generate_app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (train_app->parsed()) return train.run(out);
    if (classify_app->parsed()) return classify_cmd.run(in, out);
    if (evaluate_app->parsed()) return evaluate_cmd.run(out);
    if (mine_app->parsed()) return mine.run(out);
    if (generate_app->parsed()) return generate.run(out);
  } catch (const ModelFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitModelFormat;
  } catch (const TrainingError& e) {
    err << "training failed: " << e.what() << '\n';
    return kExitTraining;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CorpusError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hybridtext
