#include "doctest.h"

#include <fstream>
#include <sstream>

#include "fixtures.h"
#include "hybridtext/errors.h"
#include "hybridtext/hybrid.h"
#include "hybridtext/model_io.h"
#include "hybridtext/synthetic.h"

using namespace hybridtext;

namespace {

Model small_model() {
  return build_model(fixtures::small_train(), fixtures::small_pconf(), fixtures::small_mconf());
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

Model parse(const std::string& text) {
  std::istringstream in(text);
  return read_model(in);
}

}  // namespace

TEST_CASE("model text round trips exactly") {
  const Model model = small_model();
  const std::string text = serialize_model(model);
  const Model back = parse(text);
  CHECK(back.classes == model.classes);
  CHECK(back.sets == model.sets);
  CHECK(back.priors == model.priors);
  CHECK(back.table == model.table);
  CHECK(back.class_totals == model.class_totals);
  CHECK(back.preprocess.stopwords == model.preprocess.stopwords);
  CHECK(back.preprocess.min_in_doc_frequency == 1);
  CHECK(back.mining.min_support == Rational(2, 9));
  CHECK(serialize_model(back) == text);
}

TEST_CASE("model text layout") {
  const std::string text = serialize_model(small_model());
  CHECK(text.find("format_version: 1\n") != std::string::npos);
  for (const char* section : {"[classes]", "[config]", "[sets]", "[priors]", "[table]"}) {
    CHECK(text.find(section) != std::string::npos);
  }
  CHECK(text.find("min_support: 2/9\n") != std::string::npos);
}

TEST_CASE("optional config survives the round trip") {
  MiningConfig mconf = fixtures::small_mconf();
  mconf.max_set_size = 3;
  PreprocessConfig pconf = fixtures::small_pconf();
  pconf.plural_folding = false;
  pconf.stopwords = {"custom", "words"};
  const Model model = build_model(fixtures::small_train(), pconf, mconf);
  const Model back = parse(serialize_model(model));
  CHECK(back.mining.max_set_size == std::optional<std::size_t>{3});
  CHECK_FALSE(back.preprocess.plural_folding);
  CHECK(back.preprocess.stopwords == std::set<std::string>{"custom", "words"});
}

TEST_CASE("reloaded model classifies identically") {
  const Corpus corpus = generate_separable_corpus(10, 4);
  const Model model = build_model(corpus, {}, {});
  const Model back = parse(serialize_model(model));
  const Corpus held_out = generate_separable_corpus(5, 99);
  for (const auto& doc : held_out.documents()) {
    const auto kw = extract_keywords(doc.id, doc.text, back.preprocess);
    const auto a = classify(kw, model, {});
    const auto b = classify(kw, back, {});
    CHECK(a.label == b.label);
    CHECK(a.scores == b.scores);
  }
}

TEST_CASE("format errors") {
  const std::string text = serialize_model(small_model());
  CHECK_THROWS_WITH_AS(parse(replace_once(text, "format_version: 1", "format_version: 2")),
                       doctest::Contains("version"), ModelFormatError);
  CHECK_THROWS_AS(parse(replace_once(text, "format_version: 1\n", "")), ModelFormatError);
  CHECK_THROWS_AS(parse(replace_once(text, "[table]", "[tables]")), ModelFormatError);
  CHECK_THROWS_AS(parse(replace_once(text, "min_support: 2/9", "min_support: two")),
                  ModelFormatError);
  CHECK_THROWS_AS(parse(replace_once(text, "min_support: 2/9\n", "")), ModelFormatError);
  CHECK_THROWS_AS(parse(text + "bogus line without tabs\n"), ModelFormatError);
  CHECK_THROWS_AS(parse(""), ModelFormatError);

  // A table entry that disagrees with the counts is rejected.
  const auto table_pos = text.find("[table]\n");
  const auto tab = text.find('\t', table_pos);
  const auto slash = text.find('/', tab);
  std::string tampered = text;
  tampered.replace(tab + 1, slash - tab - 1, "7");
  CHECK_THROWS_AS(parse(tampered), ModelFormatError);
}

TEST_CASE("save and load through files") {
  fixtures::TempDir dir;
  const Model model = small_model();
  save_model(model, dir / "m.model");
  CHECK_FALSE(std::filesystem::exists(dir / "m.model.tmp"));
  CHECK(serialize_model(load_model(dir / "m.model")) == serialize_model(model));
  CHECK_THROWS_AS(load_model(dir / "missing.model"), ConfigError);
  CHECK_THROWS_AS(save_model(model, dir / "no-such-dir" / "m.model"), ConfigError);
}

TEST_CASE("identical training runs give identical bytes") {
  const Corpus corpus = generate_separable_corpus(15, 8);
  CHECK(serialize_model(build_model(corpus, {}, {})) == serialize_model(build_model(corpus, {}, {})));
}
