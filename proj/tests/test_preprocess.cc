#include "doctest.h"

#include <random>
#include <sstream>

#include "hybridtext/errors.h"
#include "hybridtext/preprocess.h"

using namespace hybridtext;

using Tokens = std::vector<std::string>;

TEST_CASE("tokenize splits on everything but letters") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("Let G = (V, E) be a connected graph,") ==
        Tokens{"let", "g", "v", "e", "be", "a", "connected", "graph"});
  CHECK(tokenize("NP-complete.") == Tokens{"np", "complete"});
  CHECK(tokenize("f(x) >= 2 for all x") == Tokens{"f", "x", "for", "all", "x"});
  CHECK(tokenize("degT(x)") == Tokens{"degt", "x"});
  CHECK(tokenize("caf\xc3\xa9 na\xc3\xafve") == Tokens{"caf", "na", "ve"});
}

TEST_CASE("fold_plural suffix rules") {
  CHECK(fold_plural("graphs") == "graph");
  CHECK(fold_plural("studies") == "study");
  CHECK(fold_plural("class") == "class");
  CHECK(fold_plural("classes") == "class");
  CHECK(fold_plural("boxes") == "box");
  CHECK(fold_plural("matches") == "match");
  CHECK(fold_plural("wishes") == "wish");
  CHECK(fold_plural("buses") == "bus");
  CHECK(fold_plural("ties") == "tie");
  CHECK(fold_plural("gas") == "gas");
  CHECK(fold_plural("tree") == "tree");
  CHECK(fold_plural("analyses") == "analyse");
  CHECK(fold_plural("responses") == "response");
}

TEST_CASE("fold_plural is idempotent") {
  std::mt19937_64 rng(5);
  const std::string alphabet = "abcehisxyz";
  for (int i = 0; i < 20000; ++i) {
    std::string token;
    const std::size_t len = 1 + rng() % 9;
    for (std::size_t j = 0; j < len; ++j) token.push_back(alphabet[rng() % alphabet.size()]);
    const std::string once = fold_plural(token);
    INFO(token);
    CHECK(fold_plural(once) == once);
  }
}

TEST_CASE("extract_keywords keeps repeated non-stopwords") {
  const PreprocessConfig config;
  CHECK(extract_keywords("d", "the of and is are to from am", config).empty());
  const auto kw = extract_keywords("d", "graph graph tree tree tree the the", config);
  CHECK(kw.keywords == std::set<std::string>{"graph", "tree"});
  CHECK(kw.doc_id == "d");
}

TEST_CASE("plural forms count together") {
  const PreprocessConfig config;
  CHECK(extract_keywords("d", "graph graphs", config).keywords == std::set<std::string>{"graph"});
  PreprocessConfig no_fold;
  no_fold.plural_folding = false;
  CHECK(extract_keywords("d", "graph graphs", no_fold).empty());
}

TEST_CASE("short tokens are dropped unless disabled") {
  PreprocessConfig config;
  config.min_in_doc_frequency = 1;
  config.stopwords.clear();
  CHECK(extract_keywords("d", "x x ab", config).keywords == std::set<std::string>{"ab"});
  config.min_token_length = 0;
  CHECK(extract_keywords("d", "x x ab", config).keywords == std::set<std::string>{"ab", "x"});
}

TEST_CASE("spanning-tree abstract keywords") {
  // A graph-theory abstract in which the topic words recur.
  const std::string abstract =
      "Let G be a connected graph and let X be a subset of its vertices. A spanning tree T "
      "of G is called degree bounded if every vertex x of X has degree at least f(x) in T. "
      "We prove that deciding whether such a spanning tree exists is NP-complete, settle a "
      "conjecture on spanning trees in general graphs, and give a polynomial algorithm that "
      "finds a degree bounded spanning tree of a graph under those conditions.";
  const auto kw = extract_keywords("abstract", abstract, PreprocessConfig{});
  CHECK(kw.contains("spanning"));
  CHECK(kw.contains("tree"));
  CHECK(kw.contains("graph"));
  CHECK(kw.contains("degree"));
  CHECK_FALSE(kw.contains("conjecture"));  // occurs once
  CHECK_FALSE(kw.contains("x"));
}

TEST_CASE("keyword output invariants") {
  std::mt19937_64 rng(9);
  const std::vector<std::string> words{"The", "graph", "GRAPHS", "is", "tree,", "trees.", "a",
                                       "x", "42", "studies", "study", "from", "are", "net-work"};
  const PreprocessConfig config;
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    for (int i = 0; i < 30; ++i) text += words[rng() % words.size()] + " ";
    for (const auto& t : tokenize(text)) {
      for (char c : t) CHECK((c >= 'a' && c <= 'z'));
    }
    const auto kw = extract_keywords("d", text, config);
    std::string joined;
    for (const auto& w : kw.keywords) {
      CHECK_FALSE(w.empty());
      CHECK_FALSE(config.stopwords.contains(w));
      joined += w + " ";
    }
    // Re-extracting the keyword set with frequency 1 is a fixed point.
    PreprocessConfig once = config;
    once.min_in_doc_frequency = 1;
    CHECK(extract_keywords("d", joined, once).keywords == kw.keywords);
  }
}

TEST_CASE("stopword files") {
  std::istringstream in("# comment\nfoo\n\n  bar  \n#baz\n");
  CHECK(read_stopwords(in) == std::set<std::string>{"bar", "foo"});
  CHECK_THROWS_AS(load_stopwords("/nonexistent/stopwords.txt"), ConfigError);
  const auto defaults = PreprocessConfig::default_stopwords();
  for (const char* w : {"am", "is", "are", "to", "from"}) CHECK(defaults.contains(w));
  CHECK(defaults.size() >= 140);
}

TEST_CASE("config validation") {
  PreprocessConfig config;
  config.min_in_doc_frequency = 0;
  CHECK_THROWS_AS(config.validate(), ConfigError);
}
