#include <gtest/gtest.h>

#include "penney/render.hpp"

using namespace penney;

TEST(Render, OddsLine) {
  OutcomeDistribution d;
  d.bob_win = Rational(3, 8);
  d.alice_win = Rational(5, 8);
  EXPECT_EQ(render::odds_line(d), "Bob 3/8, Alice 5/8, odds 3 to 5");
  d = {};
  d.infinite = 1;
  EXPECT_EQ(render::odds_line(d), "Bob 0, Alice 0, Infinite 1");
}

TEST(Render, CellSchema) {
  OutcomeDistribution d;
  d.bob_win = Rational(7, 16);
  d.alice_win = Rational(1, 8);
  d.tie = Rational(7, 16);
  const auto j = render::cell_json(GameVariant::post_a_bobalyptic(), BinaryWord("HHH"),
                                   BinaryWord("THH"), d);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"variant", "n", "alice", "bob", "alice_win",
                                            "bob_win", "tie", "infinite"}));
  EXPECT_EQ(j["tie"], "7/16");
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(render::cell_csv(GameVariant::post_a_bobalyptic(), BinaryWord("HHH"),
                             BinaryWord("THH"), d),
            "post_a_bobalyptic,3,HHH,THH,1/8,7/16,7/16,0");
}

TEST(Render, TableLayout) {
  const auto text = render::table_text(full_table(GameVariant::classic(), 3));
  EXPECT_NE(text.find("Bob \\ Alice | HHH  | HHT  | HTH  | HTT\n"), std::string::npos) << text;
  EXPECT_NE(text.find("THH         | 7/8  | 3/4  | 1/2  | 1/2\n"), std::string::npos) << text;
  EXPECT_NE(text.find("HHH         | *"), std::string::npos);
  const auto all = render::table_text(full_table(GameVariant::classic(), 3), true);
  EXPECT_NE(all.find("| TTT\n"), std::string::npos);
}

TEST(Render, NoFlippancyCells) {
  const auto text = render::table_text(full_table(GameVariant::no_flippancy(), 3));
  EXPECT_NE(text.find("HTHH (Bob, 4)"), std::string::npos) << text;
  EXPECT_NE(text.find("HTHTHT... (Tie, infinite)"), std::string::npos) << text;
}

TEST(Render, JsonTableIsSortedAndComplete) {
  const auto j = nlohmann::json::parse(render::table_json(full_table(GameVariant::blended(), 3)));
  ASSERT_EQ(j.size(), 56u);
  EXPECT_EQ(j[0]["alice"], "HHH");
  EXPECT_EQ(j[0]["bob"], "HHT");
  EXPECT_EQ(j[55]["alice"], "TTT");
  EXPECT_EQ(j[55]["bob"], "TTH");
}

TEST(Render, Format) {
  EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
  EXPECT_THROW(parse_format("xml"), Error);
}

TEST(Render, WaitTimeJson) {
  const auto j = nlohmann::json::parse(render::wait_time(BinaryWord("HHTTHH"), OutputFormat::json));
  EXPECT_EQ(j["cln"], 35);
  EXPECT_EQ(j["wait"], 70);
  EXPECT_EQ(j["autocorrelation"], "100011");
}
