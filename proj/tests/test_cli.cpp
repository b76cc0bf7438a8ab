#include <gtest/gtest.h>

#include "input.hpp"
#include "known_cones.hpp"
#include "report.hpp"
#include "toric/errors.hpp"

using namespace toric;
using namespace toric::cli;

TEST(InputTest, ParsesSemigroupDocument) {
  auto in = parse_input(R"({"rank": 2, "generators": [[1, 0], [1, 2]]})");
  EXPECT_EQ(in.generators.size(), 2u);
  EXPECT_EQ(in.pointed, PointedPolicy::required);
  EXPECT_TRUE(in.saturated);
  EXPECT_EQ(in.semigroup.hilbert_basis().size(), 3u);
}

TEST(InputTest, GeneratedSemigroupKeepsItsGenerators) {
  auto in = parse_input(R"({"rank": 2, "generators": [[1, 0], [1, 2]], "semigroup": "generated"})");
  EXPECT_FALSE(in.saturated);
  EXPECT_EQ(in.semigroup.hilbert_basis().size(), 2u);
}

TEST(InputTest, IntegersMayBeStrings) {
  auto in = parse_input(R"({"rank": 2, "generators": [["1", 0], [0, "123456789012345678901"]]})");
  EXPECT_EQ(in.generators[1][1], Integer("123456789012345678901"));
}

TEST(InputTest, RejectsMalformedDocuments) {
  const char* bad[] = {
      "not json",
      "[1, 2]",
      R"({"rank": 0, "generators": []})",
      R"({"rank": 2})",
      R"({"rank": 2, "generators": [[1, 0, 0]]})",
      R"({"rank": 2, "generators": [[1, 0.5]]})",
      R"({"rank": 2, "generators": [[1, 0], [0, 1]], "pointed": "maybe"})",
      R"({"rank": 2, "generators": [[1, 0], [0, 1]], "semigroup": "free"})",
  };
  for (const char* doc : bad) EXPECT_THROW(parse_input(doc), InputError) << doc;
}

TEST(InputTest, LineIsReportedBeforeRank) {
  try {
    parse_input(R"({"rank": 2, "generators": [[1, 0], [-1, 0]]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("cone contains a line"), std::string::npos);
  }
  try {
    parse_input(R"({"rank": 2, "generators": [[1, 0], [2, 0]]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("do not span"), std::string::npos);
  }
}

TEST(InputTest, RelationsNeedOneExponentPerVariable) {
  auto r = parse_relations(R"({"pairs": [[[1, 1, 0], [0, 0, 2]]]})", 3);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].rhs[2], 2);
  EXPECT_THROW(parse_relations(R"({"pairs": [[[1, 1], [0, 0, 2]]]})", 3), InputError);
  EXPECT_THROW(parse_relations(R"({"pairs": [[[1, 1, 0]]]})", 3), InputError);
}

TEST(InputTest, FollowGroups) {
  auto f = parse_follow("1,2,3,5;4,2,1,6");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], (std::vector<std::size_t>{0, 1, 2, 4}));
  EXPECT_EQ(f[1], (std::vector<std::size_t>{0, 1, 3, 5}));
  EXPECT_THROW(parse_follow("0,1"), InputError);
  EXPECT_THROW(parse_follow("1,1"), InputError);
  EXPECT_THROW(parse_follow("a"), InputError);
  EXPECT_THROW(parse_follow(""), InputError);
}

TEST(ReportTest, LargeIntegersBecomeStrings) {
  Integer limit = Integer(1) << 53;
  EXPECT_TRUE(number(limit).is_number_integer());
  EXPECT_TRUE(number(-limit).is_number_integer());
  EXPECT_TRUE(number(limit + 1).is_string());
  EXPECT_EQ(number(limit + 1).get<std::string>(), "9007199254740993");
  EXPECT_TRUE(number(-limit - 1).is_string());
}

TEST(ReportTest, JsonOutputIsDeterministicWithSortedKeys) {
  auto s = known::saturated(known::omega());
  auto a = render(charts_report(s, Characteristic(0), BlowupMode::nash), Format::json);
  auto b = render(charts_report(s, Characteristic(0), BlowupMode::nash), Format::json);
  EXPECT_EQ(a, b);
  auto doc = json::parse(a);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(doc["hilbert_basis"].size(), 7u);
  EXPECT_EQ(doc["charts"].size(), all_charts(s, Characteristic(0)).size());
}

TEST(ReportTest, HilbertReportListsCanonicalBasis) {
  auto doc = hilbert_report(known::saturated(known::omega()));
  EXPECT_EQ(doc["hilbert_basis"].size(), 7u);
  EXPECT_EQ(doc["rays"].size(), 6u);
  EXPECT_TRUE(doc["pointed"].get<bool>());
  EXPECT_TRUE(doc["saturated"].get<bool>());
  EXPECT_FALSE(render(doc, Format::text).empty());
}

TEST(BinomialTest, RelationsAmongGenerators) {
  auto h = known::omega_basis();
  // h1 + 2 h2 = h3 + h7
  Binomial ok{{1, 2, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 1}};
  Binomial bad{{1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0}};
  EXPECT_TRUE(binomial_holds(h, ok));
  EXPECT_FALSE(binomial_holds(h, bad));
  EXPECT_THROW(binomial_holds(h, Binomial{{1, 2}, {0, 0}}), DimensionError);
}
