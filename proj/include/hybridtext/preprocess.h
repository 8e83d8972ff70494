#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hybridtext {

// A document reduced to its deduplicated keywords: the transaction the
// miner counts over.
struct KeywordSet {
  std::string doc_id;
  std::set<std::string> keywords;

  bool contains(const std::string& word) const { return keywords.contains(word); }
  std::size_t size() const { return keywords.size(); }
  bool empty() const { return keywords.empty(); }
};

struct PreprocessConfig {
  std::set<std::string> stopwords = default_stopwords();
  // A token must occur at least this often within one document to count as
  // one of its keywords.
  std::size_t min_in_doc_frequency = 2;
  bool plural_folding = true;
  // Tokens shorter than this are dropped; 0 or 1 disables the filter.
  std::size_t min_token_length = 2;

  static std::set<std::string> default_stopwords();
  void validate() const;
};

// Lowercased maximal runs of ASCII letters; everything else separates.
std::vector<std::string> tokenize(std::string_view text);

// Suffix-rule singular/plural identification (not a stemmer).
std::string fold_plural(std::string_view token);

KeywordSet extract_keywords(std::string_view doc_id, std::string_view text,
                            const PreprocessConfig& config);

// One lowercase token per line; blank lines and lines starting with '#'
// are ignored.
std::set<std::string> read_stopwords(std::istream& in);
std::set<std::string> load_stopwords(const std::filesystem::path& path);

}  // namespace hybridtext
