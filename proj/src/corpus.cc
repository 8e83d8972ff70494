#include "hybridtext/corpus.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <cctype>
#include "json.hpp"

#include "hybridtext/errors.h"
#include "hybridtext/random.h"

namespace hybridtext {

namespace fs = std::filesystem;

std::size_t Corpus::add_class(const std::string& name) {
  if (auto idx = class_index(name)) return *idx;
  if (name.empty()) throw CorpusError("class name must not be empty");
  if (name.find_first_of("\t\n\r") != std::string::npos) {
    throw CorpusError("class name '" + name + "' contains a tab or newline");
  }
  classes_.push_back(name);
  return classes_.size() - 1;
}

void Corpus::add_document(Document doc) {
  if (doc.id.empty()) throw CorpusError("document id must not be empty");
  if (ids_.contains(doc.id)) throw CorpusError("duplicate document id '" + doc.id + "'");
  if (doc.label) add_class(*doc.label);
  ids_.insert(doc.id);
  documents_.push_back(std::move(doc));
}

std::optional<std::size_t> Corpus::class_index(std::string_view name) const {
  auto it = std::find(classes_.begin(), classes_.end(), name);
  if (it == classes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - classes_.begin());
}

std::size_t Corpus::label_index(const Document& doc) const {
  if (!doc.label) throw CorpusError("document '" + doc.id + "' is unlabeled");
  auto idx = class_index(*doc.label);
  if (!idx) throw CorpusError("document '" + doc.id + "' has unknown label '" + *doc.label + "'");
  return *idx;
}

bool Corpus::fully_labeled() const {
  return std::all_of(documents_.begin(), documents_.end(),
                     [](const Document& d) { return d.label.has_value(); });
}

Corpus Corpus::empty_copy() const {
  Corpus copy;
  copy.classes_ = classes_;
  return copy;
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Corpus load_directory(const fs::path& root) {
  std::vector<fs::path> class_dirs;
  std::error_code ec;
  for (fs::directory_iterator it(root, ec), end; !ec && it != end; it.increment(ec)) {
    const auto name = it->path().filename().string();
    if (it->is_directory() && !name.empty() && name.front() != '.') class_dirs.push_back(it->path());
  }
  if (ec) throw CorpusError("cannot read '" + root.string() + "': " + ec.message());
  std::sort(class_dirs.begin(), class_dirs.end());

  Corpus corpus;
  for (const auto& dir : class_dirs) {
    const std::string label = dir.filename().string();
    corpus.add_class(label);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      const auto name = entry.path().filename().string();
      if (entry.is_regular_file() && entry.path().extension() == ".txt" && name.front() != '.') {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      corpus.add_document(Document{file.stem().string(), label, read_file(file)});
    }
  }
  return corpus;
}

std::string require_string(const nlohmann::json& record, const char* field,
                           std::string_view where) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_string()) {
    throw CorpusError(std::string(where) + ": missing string field '" + field + "'");
  }
  return it->get<std::string>();
}

}  // namespace

Corpus read_manifest(std::istream& in, std::string_view source_name) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    const std::string where = std::string(source_name) + ":" + std::to_string(line_no);
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw CorpusError(where + ": malformed record: " + e.what());
    }
    if (!record.is_object()) throw CorpusError(where + ": record is not an object");
    Document doc;
    doc.id = require_string(record, "id", where);
    const std::string label = require_string(record, "label", where);
    if (!label.empty()) doc.label = label;
    doc.text = require_string(record, "text", where);
    if (doc.text.empty()) {
      throw CorpusError(where + ": record '" + doc.id + "' has empty text");
    }
    try {
      corpus.add_document(std::move(doc));
    } catch (const CorpusError& e) {
      throw CorpusError(where + ": " + e.what());
    }
  }
  return corpus;
}

Corpus load_corpus(const fs::path& source) {
  std::error_code ec;
  if (fs::is_directory(source, ec)) return load_directory(source);
  std::ifstream in(source);
  if (!in) throw CorpusError("cannot read corpus '" + source.string() + "'");
  return read_manifest(in, source.string());
}

void write_manifest(const Corpus& corpus, std::ostream& out) {
  for (const auto& doc : corpus.documents()) {
    nlohmann::ordered_json record;
    record["id"] = doc.id;
    record["label"] = doc.label.value_or("");
    record["text"] = doc.text;
    out << record.dump() << '\n';
  }
}

void write_corpus_directory(const Corpus& corpus, const fs::path& root) {
  for (const auto& name : corpus.classes()) fs::create_directories(root / name);
  for (const auto& doc : corpus.documents()) {
    if (!doc.label) throw CorpusError("cannot write unlabeled document '" + doc.id + "'");
    std::ofstream out(root / *doc.label / (doc.id + ".txt"), std::ios::binary);
    if (!out) throw ConfigError("cannot write into '" + root.string() + "'");
    out << doc.text;
  }
}

Split split_corpus(const Corpus& corpus, const Rational& fraction, std::uint64_t seed,
                   bool stratify) {
  if (fraction <= 0 || fraction >= 1) {
    throw std::invalid_argument("split fraction must lie strictly between 0 and 1, got " +
                                to_decimal_string(fraction, 6, true));
  }
  const auto& docs = corpus.documents();
  for (const auto& doc : docs) {
    if (!doc.label) throw CorpusError("cannot split: document '" + doc.id + "' is unlabeled");
  }

  std::mt19937_64 rng(seed);
  std::vector<bool> in_train(docs.size(), false);
  auto take = [&](std::vector<std::size_t> indices) {
    const auto n = static_cast<std::int64_t>(indices.size());
    const std::int64_t k = round_half_up(fraction * Rational(n));
    fisher_yates(indices, rng);
    for (std::int64_t i = 0; i < k; ++i) in_train[indices[static_cast<std::size_t>(i)]] = true;
  };

  if (stratify) {
    for (std::size_t c = 0; c < corpus.classes().size(); ++c) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < docs.size(); ++i) {
        if (corpus.label_index(docs[i]) == c) members.push_back(i);
      }
      take(std::move(members));
    }
  } else {
    std::vector<std::size_t> all(docs.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    take(std::move(all));
  }

  Split split{corpus.empty_copy(), corpus.empty_copy(), fraction, seed};
  for (std::size_t i = 0; i < docs.size(); ++i) {
    (in_train[i] ? split.train : split.test).add_document(docs[i]);
  }
  return split;
}

}  // namespace hybridtext
