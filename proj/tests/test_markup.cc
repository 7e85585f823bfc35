// tests/test_markup.cc

#include "doctest.h"
#include "sner/markup.h"
#include "test_util.h"

using namespace sner;

namespace {
const EntitySchema &S() { return DefaultSchema(); }
}  // namespace

TEST_CASE("parse_inline basic convention: tag labels the next word") {
  auto t = ParseInline("<B-PERS> محمد ذهب", S(), ParseMode::kStrict);
  REQUIRE(t.tokens.size() == 2);
  CHECK(t.tokens[0].word == "محمد");
  REQUIRE(t.tokens[0].tag.has_value());
  CHECK(t.tokens[0].tag->Label() == "B-PERS");
  CHECK_FALSE(t.tokens[1].tag.has_value());
  CHECK(t.tokens[1].word == "ذهب");
}

TEST_CASE("one tag token per word: following words are untagged") {
  auto t = ParseInline("<B-ORG> بنك مصر", S(), ParseMode::kStrict);
  REQUIRE(t.tokens.size() == 2);
  CHECK(t.tokens[0].tag.has_value());
  CHECK_FALSE(t.tokens[1].tag.has_value());
}

TEST_CASE("unknown tag is fatal in both modes") {
  CHECK_THROWS_AS(ParseInline("<B-FOO> x", S(), ParseMode::kStrict),
                  UnknownTag);
  CHECK_THROWS_AS(ParseInline("<B-FOO> x", S(), ParseMode::kLenient),
                  UnknownTag);
}

TEST_CASE("strict mode rejects BIO violations") {
  CHECK_THROWS_AS(ParseInline("<I-PERS> محمد", S(), ParseMode::kStrict),
                  BrokenBio);
  CHECK_THROWS_AS(ParseInline("محمد <B-PERS>", S(), ParseMode::kStrict),
                  DanglingTag);
  CHECK_THROWS_AS(
      ParseInline("<B-PERS> <B-GPE> محمد", S(), ParseMode::kStrict),
      AdjacentTags);
  // I- after a different entity type is also broken
  CHECK_THROWS_AS(
      ParseInline("<B-GPE> مصر <I-PERS> محمد", S(), ParseMode::kStrict),
      BrokenBio);
}

TEST_CASE("lenient mode repairs and warns") {
  std::vector<std::string> warnings;

  auto orphan = ParseInline("<I-PERS> محمد", S(), ParseMode::kLenient,
                            &warnings);
  REQUIRE(orphan.tokens.size() == 1);
  CHECK(orphan.tokens[0].tag->Label() == "I-PERS");  // kept as-is
  CHECK(warnings.size() == 1);

  warnings.clear();
  auto dangling =
      ParseInline("محمد <B-PERS>", S(), ParseMode::kLenient, &warnings);
  REQUIRE(dangling.tokens.size() == 1);
  CHECK_FALSE(dangling.tokens[0].tag.has_value());
  CHECK(warnings.size() == 1);

  warnings.clear();
  auto adjacent = ParseInline("<B-PERS> <B-GPE> محمد", S(),
                              ParseMode::kLenient, &warnings);
  REQUIRE(adjacent.tokens.size() == 1);
  CHECK(adjacent.tokens[0].tag->Label() == "B-GPE");  // last wins
  CHECK(warnings.size() == 1);
}

TEST_CASE("render_inline") {
  TaggedTranscript t;
  t.tokens.push_back({"محمد", BioTag{BioPosition::kBegin, "PERS"}});
  CHECK(RenderInline(t) == "<B-PERS> محمد");
  CHECK(RenderInline(TaggedTranscript{}) == "");
}

TEST_CASE("strip_tags and extract operations") {
  auto t = ParseInline("<B-PERS> محمد ذهب <B-DATE> امس", S(),
                       ParseMode::kStrict);
  CHECK(StripTags(t) == std::vector<std::string>{"محمد", "ذهب", "امس"});
  CHECK(StripTags(t).size() == t.tokens.size());

  auto concepts = ExtractConcepts(t);
  REQUIRE(concepts.size() == 2);
  CHECK(concepts[0].Label() == "B-PERS");
  CHECK(concepts[1].Label() == "B-DATE");

  auto pairs = ExtractConceptValues(t);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].first.Label() == "B-PERS");
  CHECK(pairs[0].second == "محمد");
  CHECK(pairs[1].second == "امس");

  auto none = ParseInline("محمد ذهب", S(), ParseMode::kStrict);
  CHECK(ExtractConcepts(none).empty());
  CHECK(ExtractConceptValues(none).empty());
  CHECK_FALSE(none.HasEntities());

  auto span = ParseInline("<B-ORG> بنك <I-ORG> مصر", S(), ParseMode::kStrict);
  auto span_concepts = ExtractConcepts(span);
  REQUIRE(span_concepts.size() == 2);
  CHECK(span_concepts[0].Label() == "B-ORG");
  CHECK(span_concepts[1].Label() == "I-ORG");
}

TEST_CASE("column format") {
  TaggedTranscript t;
  t.tokens.push_back({"محمد", BioTag{BioPosition::kBegin, "PERS"}});
  CHECK(ToColumns(t) == "محمد\tB-PERS\n");

  auto parsed = FromColumns("x\tO\n", S());
  REQUIRE(parsed.tokens.size() == 1);
  CHECK(parsed.tokens[0].word == "x");
  CHECK_FALSE(parsed.tokens[0].tag.has_value());

  CHECK_THROWS_AS(FromColumns("x\tB-PERS\tjunk\n", S()), BadColumnLine);
  CHECK_THROWS_AS(FromColumns("no-tab-line\n", S()), BadColumnLine);
  CHECK_THROWS_AS(FromColumns("x\tB-FOO\n", S()), BadColumnLine);
}

TEST_CASE("round trips on random BIO-valid transcripts") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    TaggedTranscript t = testutil::RandomTranscript(rng, S());
    CHECK(ParseInline(RenderInline(t), S(), ParseMode::kLenient) == t);
    CHECK(FromColumns(ToColumns(t), S()) == t);
  }
}

TEST_CASE("extract_concept_values projects onto extract_concepts") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 300; ++i) {
    TaggedTranscript t = testutil::RandomTranscript(rng, S());
    auto pairs = ExtractConceptValues(t);
    auto concepts = ExtractConcepts(t);
    REQUIRE(pairs.size() == concepts.size());
    for (size_t k = 0; k < pairs.size(); ++k)
      CHECK(pairs[k].first == concepts[k]);
  }
}
