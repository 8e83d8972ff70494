#include "hybridtext/preprocess.h"

#include <fstream>
#include <map>

#include "hybridtext/errors.h"

namespace hybridtext {

void PreprocessConfig::validate() const {
  if (min_in_doc_frequency < 1) throw ConfigError("min keyword frequency must be at least 1");
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char raw : text) {
    const auto c = static_cast<unsigned char>(raw);
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      current.push_back(static_cast<char>(c | 0x20));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string fold_plural(std::string_view token) {
  const std::size_t len = token.size();
  if (ends_with(token, "ies") && len > 4) {
    return std::string(token.substr(0, len - 3)) + "y";
  }
  if (ends_with(token, "sses")) {
    return std::string(token.substr(0, len - 2));
  }
  if (ends_with(token, "es")) {
    const std::string_view stem = token.substr(0, len - 2);
    if (ends_with(stem, "x") || ends_with(stem, "z") || ends_with(stem, "ch") ||
        ends_with(stem, "sh")) {
      return std::string(stem);
    }
    // An s-stem is only taken when the -s rule would leave it alone; longer
    // ones ("analyses", "responses") fall through to the -s rule below.
    if (ends_with(stem, "s") && stem.size() <= 3) return std::string(stem);
  }
  if (ends_with(token, "s") && !ends_with(token, "ss") && len > 3) {
    return std::string(token.substr(0, len - 1));
  }
  return std::string(token);
}

KeywordSet extract_keywords(std::string_view doc_id, std::string_view text,
                            const PreprocessConfig& config) {
  std::map<std::string, std::size_t> counts;
  for (auto& token : tokenize(text)) {
    if (config.stopwords.contains(token)) continue;
    std::string word = config.plural_folding ? fold_plural(token) : std::move(token);
    if (word.size() < config.min_token_length || config.stopwords.contains(word)) continue;
    ++counts[word];
  }
  KeywordSet result;
  result.doc_id = std::string(doc_id);
  for (auto& [word, count] : counts) {
    if (count >= config.min_in_doc_frequency) result.keywords.insert(word);
  }
  return result;
}

std::set<std::string> read_stopwords(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    words.insert(line.substr(first, last - first + 1));
  }
  return words;
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read stopword file '" + path.string() + "'");
  return read_stopwords(in);
}

}  // namespace hybridtext
