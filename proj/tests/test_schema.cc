// tests/test_schema.cc

#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "sner/schema.h"

using namespace sner;

TEST_CASE("default schema has the 21 Wojood types") {
  const EntitySchema &schema = DefaultSchema();
  CHECK(schema.NumTypes() == 21);
  CHECK(schema.HasType("PERS"));
  CHECK(schema.HasType("GPE"));
  CHECK(schema.HasType("UNIT"));
  CHECK(schema.HasType("WEBSITE"));
  CHECK_FALSE(schema.HasType("FOO"));
  CHECK_FALSE(schema.HasType("pers"));

  auto tokens = schema.TagTokens();
  CHECK(tokens.size() == 42);
  CHECK(std::find(tokens.begin(), tokens.end(), "<B-PERS>") != tokens.end());
  CHECK(std::find(tokens.begin(), tokens.end(), "<I-PERS>") != tokens.end());

  // Table row order is stable
  CHECK(schema.Types().front() == "CARDINAL");
  CHECK(schema.Types().back() == "WEBSITE");
}

TEST_CASE("default schema is deterministic across calls") {
  CHECK(DefaultSchema().Types() == DefaultSchema().Types());
}

TEST_CASE("tag token parse inverts construction for every schema tag") {
  const EntitySchema &schema = DefaultSchema();
  for (const auto &name : schema.Types()) {
    for (auto pos : {BioPosition::kBegin, BioPosition::kInside}) {
      BioTag tag{pos, name};
      auto parsed = schema.ParseTagToken(tag.Token());
      REQUIRE(parsed.has_value());
      CHECK(*parsed == tag);
    }
  }
}

TEST_CASE("load_schema accepts comments and preserves order") {
  std::istringstream in("# custom schema\nPERS\nLOC  # trailing comment\n\n");
  EntitySchema schema = LoadSchema(in);
  CHECK(schema.NumTypes() == 2);
  CHECK(schema.Types() == std::vector<std::string>{"PERS", "LOC"});
}

TEST_CASE("load_schema error cases") {
  std::istringstream dup("PERS\nPERS\n");
  CHECK_THROWS_AS(LoadSchema(dup), DuplicateType);

  std::istringstream bad("b-pers\n");
  CHECK_THROWS_AS(LoadSchema(bad), BadTypeName);

  std::istringstream empty("# nothing here\n");
  CHECK_THROWS_AS(LoadSchema(empty), EmptySchema);
}

TEST_CASE("tag shape detection") {
  CHECK(IsTagShaped("<B-PERS>"));
  CHECK(IsTagShaped("<I-ORG>"));
  CHECK(IsTagShaped("<B-FOO>"));  // shaped, even if not in schema
  CHECK_FALSE(IsTagShaped("<B-pers>"));
  CHECK_FALSE(IsTagShaped("<X-PERS>"));
  CHECK_FALSE(IsTagShaped("B-PERS"));
  CHECK_FALSE(IsTagShaped("<B->"));
  CHECK_FALSE(IsTagShaped("word"));
  CHECK_FALSE(DefaultSchema().ParseTagToken("<B-FOO>").has_value());
}
