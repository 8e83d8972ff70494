#include "hybridtext/synthetic.h"

#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "hybridtext/random.h"

namespace hybridtext {

namespace {

struct ClassVocabulary {
  const char* name;
  std::array<const char*, 2> anchors;
  std::array<const char*, 4> topics;
};

constexpr std::array<ClassVocabulary, 4> kVocabularies{{
    {"ALG", {"graph", "vertex"}, {"spanning", "tree", "polynomial", "bound"}},
    {"EDE", {"student", "teacher"}, {"classroom", "assessment", "curriculum", "lesson"}},
    {"AI", {"neural", "network"}, {"fuzzy", "agent", "inference", "training"}},
    {"DB", {"query", "relational"}, {"schema", "transaction", "index", "join"}},
}};

constexpr std::array<const char*, 8> kFiller{"the", "of", "and", "is", "in", "to", "we", "this"};
constexpr std::array<const char*, 8> kNoise{"paper",  "approach", "result",  "method",
                                            "propose", "study",   "problem", "novel"};

}  // namespace

Corpus generate_separable_corpus(std::size_t docs_per_class, std::uint64_t seed,
                                 std::size_t class_count) {
  if (class_count < 1 || class_count > kVocabularies.size()) {
    throw std::invalid_argument("synthetic corpus supports 1 to 4 classes");
  }
  std::mt19937_64 rng(seed);
  Corpus corpus;
  for (std::size_t c = 0; c < class_count; ++c) corpus.add_class(kVocabularies[c].name);

  for (std::size_t c = 0; c < class_count; ++c) {
    const auto& vocab = kVocabularies[c];
    for (std::size_t d = 0; d < docs_per_class; ++d) {
      std::vector<std::string> words;
      for (const char* a : vocab.anchors) words.insert(words.end(), 2, a);
      const auto first = uniform_below(rng, 4);
      const auto second = (first + 1 + uniform_below(rng, 3)) % 4;
      words.insert(words.end(), 2, vocab.topics[first]);
      words.insert(words.end(), 2, vocab.topics[second]);
      for (int i = 0; i < 4; ++i) words.emplace_back(kFiller[uniform_below(rng, kFiller.size())]);
      words.emplace_back(kNoise[uniform_below(rng, kNoise.size())]);
      fisher_yates(words, rng);

      std::string text;
      for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
      text += ".";
      std::string id = vocab.name;
      for (auto& ch : id) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      id += "-" + std::to_string(d + 1);
      corpus.add_document(Document{id, std::string(vocab.name), text});
    }
  }
  return corpus;
}

}  // namespace hybridtext
