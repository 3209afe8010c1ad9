#include <gtest/gtest.h>

#include "penney/render.hpp"
#include "penney/simulate.hpp"

using namespace penney;

namespace {
BinaryWord W(std::string_view s) { return BinaryWord(s); }
}  // namespace

TEST(SplitMix64, ReferenceOutputs) {
  // First outputs for seed 0 from the published reference implementation.
  SplitMix64 g(0);
  EXPECT_EQ(g.next(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(g.next(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(g.next(), 0x06C45D188009454Full);
}

TEST(CoinStream, FairEnough) {
  CoinStream c(7);
  std::uint64_t tails = 0;
  const std::uint64_t n = 1'000'000;
  for (std::uint64_t i = 0; i < n; ++i) tails += c.flip();
  EXPECT_LT(std::abs(static_cast<double>(tails) - n / 2.0), 5 * std::sqrt(n / 4.0));
}

TEST(Watcher, MatchesLikeSubstringSearch) {
  Watcher w(W("HTH"));
  std::string seen;
  for (char c : std::string("HHTHTHTTHTH")) {
    seen.push_back(c);
    const bool hit = seen.size() >= 3 && seen.compare(seen.size() - 3, 3, "HTH") == 0;
    EXPECT_EQ(w.completes_with(c == 'T'), hit) << seen;
    EXPECT_EQ(w.push(c == 'T'), hit) << seen;
  }
  Watcher p(W("HHT"));
  p.push(0);
  p.push(0);
  EXPECT_EQ(p.progress(), 2u);
  p.push(0);
  EXPECT_EQ(p.progress(), 2u);
  p.push(1);
  p.push(1);
  EXPECT_EQ(p.progress(), 0u);
}

TEST(Simulate, ClassicAndTwoCoinExamples) {
  auto r = simulate(GameVariant::classic(), W("HHH"), W("THH"), 1'000'000, 1, 2);
  EXPECT_EQ(r.counts.total(), 1'000'000u);
  EXPECT_EQ(r.exact.bob_win, Rational(7, 8));
  EXPECT_LE(std::fabs(*r.z_score(r.counts.bob, r.exact.bob_win)), 4.0);
  EXPECT_TRUE(r.consistent(4.0));

  r = simulate(GameVariant::two_coin(), W("HT"), W("HT"), 1'000'000, 1, 2);
  EXPECT_EQ(r.exact.tie, Rational(5, 27));
  EXPECT_LE(std::fabs(*r.z_score(r.counts.tie, r.exact.tie)), 4.0);
}

TEST(Simulate, Reproducible) {
  for (unsigned workers : {1u, 3u}) {
    const auto a = simulate(GameVariant::blended(), W("HTH"), W("TTH"), 20000, 99, workers);
    const auto b = simulate(GameVariant::blended(), W("HTH"), W("TTH"), 20000, 99, workers);
    EXPECT_EQ(render::simulation(a, OutputFormat::json),
              render::simulation(b, OutputFormat::json));
    EXPECT_EQ(render::simulation(a, OutputFormat::text),
              render::simulation(b, OutputFormat::text));
  }
  const auto s1 = simulate(GameVariant::classic(), W("HTH"), W("TTH"), 20000, 1);
  const auto s2 = simulate(GameVariant::classic(), W("HTH"), W("TTH"), 20000, 2);
  EXPECT_NE(s1.counts.alice, s2.counts.alice);
}

TEST(Simulate, HeadStartUsesTheRules) {
  const auto r = simulate(GameVariant::head_start(), W("HHH"), W("THH"), 200000, 5);
  EXPECT_EQ(r.exact.alice_win, Rational(3, 16));
  EXPECT_TRUE(r.consistent(5.0));
}

TEST(Simulate, PostABobalypticTies) {
  const auto r = simulate(GameVariant::post_a_bobalyptic(), W("HHH"), W("THH"), 200000, 3);
  EXPECT_EQ(r.exact.tie, Rational(7, 16));
  EXPECT_GT(r.counts.tie, 0u);
  EXPECT_TRUE(r.consistent(5.0));
}

TEST(Simulate, SecondOccurrence) {
  const auto r = simulate(GameVariant::second_occurrence(), W("HHH"), W("HTH"), 200000, 11);
  EXPECT_EQ(r.exact.bob_win, Rational(69, 125));
  EXPECT_TRUE(r.consistent(5.0));
}

TEST(Simulate, Preconditions) {
  try {
    simulate(GameVariant::no_flippancy(), W("HHH"), W("THH"), 10, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
    EXPECT_NE(std::string(e.what()).find("no_flippancy_play"), std::string::npos);
  }
  EXPECT_THROW(simulate(GameVariant::classic(), W("HHH"), W("HHH"), 10, 1), Error);
  EXPECT_THROW(simulate(GameVariant::classic(), W("HHH"), W("HH"), 10, 1), Error);
  EXPECT_THROW(simulate(GameVariant::classic(), W("HHH"), W("THH"), 0, 1), Error);
  EXPECT_NO_THROW(simulate(GameVariant::two_coin(), W("HHH"), W("HHH"), 10, 1));
}

TEST(Simulate, ZScoreDefinition) {
  SimulationReport r{GameVariant::classic(), W("HH"), W("TH"), 100, 0, 1, {}, {}};
  r.counts.bob = 80;
  EXPECT_NEAR(*r.z_score(80, Rational(3, 4)), (0.8 - 0.75) / std::sqrt(0.75 * 0.25 / 100), 1e-12);
  EXPECT_FALSE(r.z_score(0, Rational(0)));
  EXPECT_FALSE(r.z_score(100, Rational(1)));
}
