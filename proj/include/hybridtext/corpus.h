#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hybridtext/rational.h"

namespace hybridtext {

struct Document {
  std::string id;
  std::optional<std::string> label;  // absent for unclassified input
  std::string text;
};

// Labeled document collection with an ordered class registry. Registration
// order is the tie-breaking order used by every downstream argmax.
class Corpus {
 public:
  Corpus() = default;

  // Registers `name` if new and returns its index.
  std::size_t add_class(const std::string& name);

  // Appends a document. Throws CorpusError on an empty or duplicate id.
  // A label that is not yet registered is registered first.
  void add_document(Document doc);

  const std::vector<std::string>& classes() const { return classes_; }
  const std::vector<Document>& documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }

  std::optional<std::size_t> class_index(std::string_view name) const;
  // Index of the document's label. Throws CorpusError for unlabeled docs.
  std::size_t label_index(const Document& doc) const;
  bool fully_labeled() const;

  // Empty corpus sharing this corpus's class registry.
  Corpus empty_copy() const;

 private:
  std::vector<std::string> classes_;
  std::vector<Document> documents_;
  std::unordered_set<std::string> ids_;
};

struct Split {
  Corpus train;
  Corpus test;
  Rational fraction;
  std::uint64_t seed = 0;
};

// Reads `<root>/<class>/<docid>.txt` (directory) or a JSON-lines manifest of
// {id, label, text} records (regular file).
Corpus load_corpus(const std::filesystem::path& source);
Corpus read_manifest(std::istream& in, std::string_view source_name = "manifest");

void write_manifest(const Corpus& corpus, std::ostream& out);
// Writes the directory layout understood by load_corpus. All documents must
// be labeled.
void write_corpus_directory(const Corpus& corpus, const std::filesystem::path& root);

// Deterministic train/test partition. Train size is round-half-up of
// fraction * N; with `stratify` the rounding is applied per class instead.
Split split_corpus(const Corpus& corpus, const Rational& fraction, std::uint64_t seed,
                   bool stratify = false);

}  // namespace hybridtext
