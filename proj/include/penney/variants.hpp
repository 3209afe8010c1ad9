#pragma once

// One evaluator per game. Every evaluator takes Alice's word first and
// Bob's word second and returns exact outcome probabilities.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "penney/chain.hpp"
#include "penney/error.hpp"
#include "penney/rational.hpp"
#include "penney/word.hpp"

namespace penney {

enum class VariantTag : std::uint8_t {
  classic,
  head_start,
  post_a_bobalyptic,
  kth_occurrence,
  two_coin,
  no_flippancy,
  blended,
};

struct GameVariant {
  VariantTag tag = VariantTag::classic;
  unsigned k = 1;  // occurrence target, kth_occurrence only

  static GameVariant classic() { return {VariantTag::classic, 1}; }
  static GameVariant head_start() { return {VariantTag::head_start, 1}; }
  static GameVariant post_a_bobalyptic() { return {VariantTag::post_a_bobalyptic, 1}; }
  static GameVariant kth_occurrence(unsigned k) {
    if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be >= 1");
    return {VariantTag::kth_occurrence, k};
  }
  static GameVariant second_occurrence() { return kth_occurrence(2); }
  static GameVariant two_coin() { return {VariantTag::two_coin, 1}; }
  static GameVariant no_flippancy() { return {VariantTag::no_flippancy, 1}; }
  static GameVariant blended() { return {VariantTag::blended, 1}; }

  /// Outcome probabilities are invariant under exchanging the players.
  bool swap_symmetric() const {
    return tag == VariantTag::classic || tag == VariantTag::kth_occurrence ||
           tag == VariantTag::two_coin || tag == VariantTag::blended;
  }
  bool randomized() const { return tag != VariantTag::no_flippancy; }
  bool allows_equal_words() const { return tag == VariantTag::two_coin; }

  friend bool operator==(const GameVariant&, const GameVariant&) = default;
};

inline std::string to_string(const GameVariant& v) {
  switch (v.tag) {
    case VariantTag::classic: return "classic";
    case VariantTag::head_start: return "head_start";
    case VariantTag::post_a_bobalyptic: return "post_a_bobalyptic";
    case VariantTag::kth_occurrence:
      return v.k == 2 ? "second_occurrence" : "kth_occurrence:" + std::to_string(v.k);
    case VariantTag::two_coin: return "two_coin";
    case VariantTag::no_flippancy: return "no_flippancy";
    case VariantTag::blended: return "blended";
  }
  return "?";
}

/// Accepts the names printed by to_string, with '-' in place of '_' as well,
/// and "kth_occurrence:K".
inline GameVariant parse_variant(std::string_view text) {
  std::string s(text);
  for (char& c : s) {
    if (c == '-') c = '_';
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  if (s == "classic" || s == "penney") return GameVariant::classic();
  if (s == "head_start") return GameVariant::head_start();
  if (s == "post_a_bobalyptic") return GameVariant::post_a_bobalyptic();
  if (s == "second_occurrence") return GameVariant::second_occurrence();
  if (s == "two_coin") return GameVariant::two_coin();
  if (s == "no_flippancy") return GameVariant::no_flippancy();
  if (s == "blended") return GameVariant::blended();
  const std::string kth = "kth_occurrence:";
  if (s.rfind(kth, 0) == 0) {
    const std::string digits = s.substr(kth.size());
    if (!digits.empty() && digits.size() <= 6 &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      const auto k = std::stoul(digits);
      if (k >= 1) return GameVariant::kth_occurrence(static_cast<unsigned>(k));
    }
  }
  throw Error(ErrorKind::unknown_variant, "unknown variant '" + std::string(text) +
                                             "' (classic, head_start, post_a_bobalyptic, "
                                             "second_occurrence, kth_occurrence:K, "
                                             "two_coin, no_flippancy, blended)");
}

inline void require_distinct_pair(const BinaryWord& a, const BinaryWord& b) {
  require_same_length(a, b);
  if (a == b)
    throw Error(ErrorKind::invalid_argument,
                "Alice and Bob must choose different words (both chose " +
                    a.str() + ")");
}

// ---------------------------------------------------------------------------
// Classic game

/// Bob's odds (his win : Alice's win) from Conway leading numbers:
/// (C_AA - C_AB) / (C_BB - C_BA).
inline Rational classic_odds(const BinaryWord& alice, const BinaryWord& bob) {
  require_distinct_pair(alice, bob);
  const auto caa = conway_leading_number(alice, alice).value;
  const auto cab = conway_leading_number(alice, bob).value;
  const auto cbb = conway_leading_number(bob, bob).value;
  const auto cba = conway_leading_number(bob, alice).value;
  if (cbb <= cba || caa <= cab)
    throw Error(ErrorKind::internal, "degenerate leading numbers");
  return make_rational(static_cast<long>(caa - cab), cbb - cba);
}

/// Distribution implied by classic_odds.
inline OutcomeDistribution classic_distribution_from_odds(const BinaryWord& alice,
                                                          const BinaryWord& bob) {
  const Rational odds = classic_odds(alice, bob);
  OutcomeDistribution d;
  d.bob_win = odds / (1 + odds);
  d.alice_win = 1 - d.bob_win;
  return d;
}

inline OutcomeDistribution classic_probabilities(const BinaryWord& alice,
                                                 const BinaryWord& bob) {
  require_distinct_pair(alice, bob);
  return absorption_probabilities(product_chain(
      PrefixAutomaton(alice), PrefixAutomaton(bob), RaceRule::shared_sequence));
}

/// Flip of Alice's second character followed by her first n-1 characters.
inline BinaryWord best_response(const BinaryWord& alice) {
  if (alice.size() < 2)
    throw Error(ErrorKind::invalid_argument, "best response needs length >= 2");
  std::string s(1, flip(alice[1]));
  s += alice.prefix(alice.size() - 1);
  return BinaryWord::parse(s);
}

// ---------------------------------------------------------------------------
// Head-Start game: the first flip counts only toward Alice's word.

/// Closed form: alice = p + (1 - p) / 2^n, bob = (1 - p)(1 - 1/2^n), where p
/// is Alice's classic win probability.
inline OutcomeDistribution head_start_probabilities(const BinaryWord& alice,
                                                    const BinaryWord& bob) {
  const Rational p = classic_distribution_from_odds(alice, bob).alice_win;
  const Rational lead = inverse_pow2(static_cast<unsigned>(alice.size()));
  OutcomeDistribution d;
  d.alice_win = p + (1 - p) * lead;
  d.bob_win = (1 - p) * (1 - lead);
  return d;
}

/// The same game solved from its rules: a chain whose first character
/// advances only Alice's automaton.
inline AbsorbingChain head_start_chain(const BinaryWord& alice,
                                       const BinaryWord& bob) {
  require_distinct_pair(alice, bob);
  const PrefixAutomaton a(alice), b(bob);
  const std::size_t n = alice.size();
  using Key = std::array<std::size_t, 3>;  // (progress A, progress B, started)
  const Rational half(1, 2);
  return explore_chain(
      Key{0, 0, 0},
      [&, n](const Key& s) -> Expansion<Key> {
        if (s[0] == n) return Outcome::alice_win;
        if (s[1] == n) return Outcome::bob_win;
        std::vector<std::pair<Key, Rational>> out;
        for (char c : {'H', 'T'})
          out.push_back({Key{a.next(s[0], c), s[2] ? b.next(s[1], c) : 0, 1}, half});
        return out;
      },
      [](const Key& s) {
        return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) +
               (s[2] ? ")" : ", before first flip)");
      });
}

inline OutcomeDistribution head_start_chain_probabilities(const BinaryWord& alice,
                                                          const BinaryWord& bob) {
  return absorption_probabilities(head_start_chain(alice, bob));
}

// ---------------------------------------------------------------------------
// Post-a-Bobalyptic game: if Bob completes first Alice gets one extra flip;
// completing her word with it is a tie.

/// Alice's extra flip can only help when her (n-1)-prefix equals Bob's
/// (n-1)-suffix.
inline bool extra_flip_can_tie(const BinaryWord& alice, const BinaryWord& bob) {
  require_same_length(alice, bob);
  const std::size_t n = alice.size();
  return alice.prefix(n - 1) == bob.suffix(n - 1);
}

inline OutcomeDistribution post_a_bobalyptic_probabilities(const BinaryWord& alice,
                                                           const BinaryWord& bob) {
  const auto classic = classic_distribution_from_odds(alice, bob);
  OutcomeDistribution d;
  d.alice_win = classic.alice_win;
  if (extra_flip_can_tie(alice, bob)) {
    d.bob_win = classic.bob_win / 2;
    d.tie = classic.bob_win / 2;
  } else {
    d.bob_win = classic.bob_win;
  }
  return d;
}

// ---------------------------------------------------------------------------
// k-th Occurrence game: first word to occur k times (overlaps counted) wins.

inline OutcomeDistribution kth_occurrence_probabilities(const BinaryWord& alice,
                                                        const BinaryWord& bob,
                                                        unsigned k) {
  require_distinct_pair(alice, bob);
  if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be >= 1");
  return absorption_probabilities(product_chain(PrefixAutomaton(alice),
                                                PrefixAutomaton(bob),
                                                RaceRule::shared_sequence, {k, k}));
}

// ---------------------------------------------------------------------------
// Two-Coin game: separate coins, simultaneous completion ties.

inline OutcomeDistribution two_coin_probabilities(const BinaryWord& alice,
                                                  const BinaryWord& bob) {
  require_same_length(alice, bob);
  return absorption_probabilities(product_chain(
      PrefixAutomaton(alice), PrefixAutomaton(bob), RaceRule::independent_coins));
}

// ---------------------------------------------------------------------------
// No-Flippancy game: no coin. On each turn the mover finds the longest suffix
// of the output that is a prefix of their own word, of length i, and emits
// character i + 1 of their word. Alice moves first.

enum class NoFlippancyOutcome : std::uint8_t { alice, bob, tie_finite, tie_infinite };

inline std::string to_string(NoFlippancyOutcome o) {
  switch (o) {
    case NoFlippancyOutcome::alice: return "Alice";
    case NoFlippancyOutcome::bob: return "Bob";
    case NoFlippancyOutcome::tie_finite: return "Tie";
    case NoFlippancyOutcome::tie_infinite: return "Tie, infinite";
  }
  return "?";
}

struct NoFlippancyTurn {
  bool alice_moved = true;
  char emitted = 'H';
  std::size_t alice_progress = 0;  // after the move
  std::size_t bob_progress = 0;
};

struct NoFlippancyResult {
  NoFlippancyOutcome outcome = NoFlippancyOutcome::tie_infinite;
  std::string output;     // full output of a finite game, else preperiod+period
  std::string preperiod;  // infinite games only
  std::string period;     // infinite games only; primitive
  std::optional<std::size_t> turns;  // empty for infinite games
  std::vector<NoFlippancyTurn> trace;

  bool infinite() const { return outcome == NoFlippancyOutcome::tie_infinite; }

  /// "HTHH" for finite games, "HHTHTHT..." (period shown three times) for
  /// infinite ones.
  std::string display() const {
    if (!infinite()) return output;
    std::string s = preperiod;
    for (int i = 0; i < 3; ++i) s += period;
    return s + "...";
  }
};

inline NoFlippancyResult no_flippancy_play(const BinaryWord& alice,
                                           const BinaryWord& bob) {
  require_distinct_pair(alice, bob);
  const PrefixAutomaton a(alice), b(bob);
  const std::size_t n = alice.size();

  NoFlippancyResult result;
  std::string out;
  std::size_t pa = 0, pb = 0;
  std::map<std::tuple<std::size_t, std::size_t, bool>, std::size_t> seen;

  for (std::size_t turn = 0;; ++turn) {
    const bool alice_turn = turn % 2 == 0;
    auto [it, fresh] = seen.try_emplace({pa, pb, alice_turn}, turn);
    if (!fresh) {
      std::size_t start = it->second;
      const std::size_t len = turn - start;
      // Slide the cycle start back as far as the output allows.
      while (start > 0 && out[start - 1] == out[start - 1 + len]) --start;
      std::string period = out.substr(start, len);
      for (std::size_t d = 1; d <= len; ++d) {
        if (len % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < len && repeats; ++i)
          repeats = period[i] == period[i - d];
        if (repeats) { period.resize(d); break; }
      }
      result.outcome = NoFlippancyOutcome::tie_infinite;
      result.preperiod = out.substr(0, start);
      result.period = period;
      result.output = result.preperiod + result.period;
      return result;
    }

    const char c = alice_turn ? alice[pa] : bob[pb];
    out.push_back(c);
    pa = a.next(pa, c);
    pb = b.next(pb, c);
    result.trace.push_back({alice_turn, c, pa, pb});

    if (pa == n || pb == n) {
      result.outcome = pa == n && pb == n ? NoFlippancyOutcome::tie_finite
                       : pa == n          ? NoFlippancyOutcome::alice
                                          : NoFlippancyOutcome::bob;
      result.output = out;
      result.turns = out.size();
      return result;
    }
  }
}

// ---------------------------------------------------------------------------
// Blended game: each player wants the next character of their own word given
// their current progress. Agreement is granted; disagreement is a fair flip.

inline AbsorbingChain blended_chain(const BinaryWord& alice, const BinaryWord& bob) {
  require_distinct_pair(alice, bob);
  const PrefixAutomaton a(alice), b(bob);
  const std::size_t n = alice.size();
  using Key = std::array<std::size_t, 2>;
  const Rational half(1, 2);
  return explore_chain(
      Key{0, 0},
      [&, n](const Key& s) -> Expansion<Key> {
        if (s[0] == n && s[1] == n)
          throw Error(ErrorKind::internal, "simultaneous completion in blended game");
        if (s[0] == n) return Outcome::alice_win;
        if (s[1] == n) return Outcome::bob_win;
        const char wa = alice[s[0]], wb = bob[s[1]];
        if (wa == wb)
          return std::vector<std::pair<Key, Rational>>{
              {Key{a.next(s[0], wa), b.next(s[1], wa)}, Rational(1)}};
        return std::vector<std::pair<Key, Rational>>{
            {Key{a.next(s[0], 'H'), b.next(s[1], 'H')}, half},
            {Key{a.next(s[0], 'T'), b.next(s[1], 'T')}, half}};
      },
      [](const Key& s) {
        return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + ")";
      });
}

inline OutcomeDistribution blended_probabilities(const BinaryWord& alice,
                                                 const BinaryWord& bob) {
  return absorption_probabilities(blended_chain(alice, bob));
}

// ---------------------------------------------------------------------------

/// A no-flippancy game as a distribution: the certain outcome gets mass one.
inline OutcomeDistribution as_distribution(const NoFlippancyResult& r) {
  OutcomeDistribution d;
  switch (r.outcome) {
    case NoFlippancyOutcome::alice: d.alice_win = 1; break;
    case NoFlippancyOutcome::bob: d.bob_win = 1; break;
    case NoFlippancyOutcome::tie_finite: d.tie = 1; break;
    case NoFlippancyOutcome::tie_infinite: d.infinite = 1; break;
  }
  return d;
}

/// Dispatches to the evaluator for `variant`.
inline OutcomeDistribution evaluate(const GameVariant& variant,
                                    const BinaryWord& alice, const BinaryWord& bob) {
  switch (variant.tag) {
    case VariantTag::classic: return classic_probabilities(alice, bob);
    case VariantTag::head_start: return head_start_probabilities(alice, bob);
    case VariantTag::post_a_bobalyptic: return post_a_bobalyptic_probabilities(alice, bob);
    case VariantTag::kth_occurrence: return kth_occurrence_probabilities(alice, bob, variant.k);
    case VariantTag::two_coin: return two_coin_probabilities(alice, bob);
    case VariantTag::no_flippancy: return as_distribution(no_flippancy_play(alice, bob));
    case VariantTag::blended: return blended_probabilities(alice, bob);
  }
  throw Error(ErrorKind::internal, "unhandled variant");
}

}  // namespace penney
