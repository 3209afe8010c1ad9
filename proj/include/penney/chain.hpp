#pragma once

// Prefix automata, absorbing Markov chains built from them, and an exact
// rational solver for absorption probabilities and expected absorption time.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "penney/error.hpp"
#include "penney/rational.hpp"
#include "penney/word.hpp"

namespace penney {

inline constexpr std::size_t char_index(char c) noexcept { return c == 'T' ? 1 : 0; }
inline constexpr char index_char(std::size_t i) noexcept { return i == 0 ? 'H' : 'T'; }

/// Longest-overlap matcher for one word. State i means the longest suffix
/// of the text read so far that is a prefix of the word has length i; state
/// n is the accept state and keeps matching (overlapping occurrences count).
class PrefixAutomaton {
 public:
  explicit PrefixAutomaton(BinaryWord word) : word_(std::move(word)) {
    const std::size_t n = word_.size();
    // failure_[i]: longest proper border of word[0, i)
    std::vector<std::size_t> failure(n + 1, 0);
    for (std::size_t i = 2; i <= n; ++i) {
      std::size_t k = failure[i - 1];
      while (k > 0 && word_[k] != word_[i - 1]) k = failure[k];
      if (word_[k] == word_[i - 1]) ++k;
      failure[i] = k;
    }
    table_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t c = 0; c < 2; ++c) {
        const char ch = index_char(c);
        if (i < n && word_[i] == ch)
          table_[i][c] = i + 1;
        else if (i == 0)
          table_[i][c] = 0;
        else
          table_[i][c] = table_[failure[i]][c];
      }
    }
  }

  const BinaryWord& word() const noexcept { return word_; }
  std::size_t accept() const noexcept { return word_.size(); }
  std::size_t state_count() const noexcept { return table_.size(); }

  std::size_t next(std::size_t state, char c) const {
    return table_.at(state)[char_index(c)];
  }

  /// Progress after reading `text` from the start state.
  std::size_t run(std::string_view text) const {
    std::size_t s = 0;
    for (char c : text) s = next(s, c);
    return s;
  }

 private:
  BinaryWord word_;
  std::vector<std::array<std::size_t, 2>> table_;
};

inline PrefixAutomaton build_prefix_automaton(const BinaryWord& w) {
  return PrefixAutomaton(w);
}

enum class Outcome : std::uint8_t { alice_win, bob_win, tie };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::alice_win: return "alice_win";
    case Outcome::bob_win: return "bob_win";
    case Outcome::tie: return "tie";
  }
  return "?";
}

/// Exact probabilities of every way a game can end. Sums to one.
struct OutcomeDistribution {
  Rational alice_win = 0;
  Rational bob_win = 0;
  Rational tie = 0;
  Rational infinite = 0;

  Rational total() const { return alice_win + bob_win + tie + infinite; }

  /// The same game seen with the players' roles exchanged.
  OutcomeDistribution swapped() const {
    return {bob_win, alice_win, tie, infinite};
  }

  friend bool operator==(const OutcomeDistribution&,
                         const OutcomeDistribution&) = default;
};

struct Transition {
  std::size_t target = 0;
  Rational probability;
};

struct ChainState {
  std::optional<Outcome> outcome;  // set for absorbing states
  std::vector<Transition> out;
  std::string label;
};

class AbsorbingChain {
 public:
  AbsorbingChain() = default;
  AbsorbingChain(std::vector<ChainState> states, std::size_t start)
      : states_(std::move(states)), start_(start) {
    validate();
  }

  const std::vector<ChainState>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  std::size_t start() const noexcept { return start_; }
  const ChainState& operator[](std::size_t i) const { return states_.at(i); }

 private:
  void validate() const {
    if (start_ >= states_.size())
      throw Error(ErrorKind::internal, "chain start state out of range");
    for (const auto& s : states_) {
      if (s.outcome) {
        if (!s.out.empty())
          throw Error(ErrorKind::internal, "absorbing state with transitions");
        continue;
      }
      Rational sum = 0;
      for (const auto& t : s.out) {
        if (t.target >= states_.size() || sgn(t.probability) <= 0)
          throw Error(ErrorKind::internal, "bad transition in " + s.label);
        sum += t.probability;
      }
      if (sum != 1)
        throw Error(ErrorKind::internal,
                    "outgoing probabilities of " + s.label + " sum to " +
                        to_string(sum));
    }
  }

  std::vector<ChainState> states_;
  std::size_t start_ = 0;
};

/// Result of expanding one state: either the game is over, or a list of
/// successor keys with probabilities (duplicates are merged).
template <class Key>
using Expansion = std::variant<Outcome, std::vector<std::pair<Key, Rational>>>;

/// Builds the chain reachable from `start` by breadth-first expansion.
/// `expand(key)` returns an Expansion<Key>; `describe(key)` a label.
template <class Key, class Expand, class Describe>
AbsorbingChain explore_chain(const Key& start, Expand expand,
                             Describe describe) {
  std::map<Key, std::size_t> index;
  std::vector<Key> keys;
  std::vector<ChainState> states;
  std::deque<std::size_t> queue;

  auto intern = [&](const Key& k) {
    auto [it, fresh] = index.try_emplace(k, keys.size());
    if (fresh) {
      keys.push_back(k);
      states.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(start);

  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const Key key = keys[id];
    Expansion<Key> e = expand(key);
    ChainState built;
    built.label = describe(key);
    if (auto* o = std::get_if<Outcome>(&e)) {
      built.outcome = *o;
    } else {
      std::map<std::size_t, Rational> merged;
      for (auto& [next, p] : std::get<1>(e)) merged[intern(next)] += p;
      for (auto& [target, p] : merged) built.out.push_back({target, p});
    }
    states[id] = std::move(built);
  }
  return AbsorbingChain(std::move(states), 0);
}

namespace detail {

/// Solves A X = B exactly. A is square; B has one column per right-hand
/// side. Rows are eliminated with the sparsest available pivot row.
inline std::vector<std::vector<Rational>> solve_exact(
    std::vector<std::vector<Rational>> a, std::vector<std::vector<Rational>> b) {
  const std::size_t n = a.size();
  const std::size_t m = n == 0 ? 0 : b.front().size();
  std::vector<std::size_t> row_of(n);
  std::vector<bool> used(n, false);

  auto nonzeros = [&](std::size_t r) {
    return std::count_if(a[r].begin(), a[r].end(),
                         [](const Rational& x) { return sgn(x) != 0; });
  };

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    long best = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (used[r] || sgn(a[r][col]) == 0) continue;
      long nz = nonzeros(r);
      if (pivot == n || nz < best) { pivot = r; best = nz; }
    }
    if (pivot == n) throw Error(ErrorKind::internal, "singular system");
    used[pivot] = true;
    row_of[col] = pivot;

    const Rational inv = 1 / a[pivot][col];
    for (std::size_t c = col; c < n; ++c)
      if (sgn(a[pivot][c]) != 0) a[pivot][c] *= inv;
    for (std::size_t c = 0; c < m; ++c)
      if (sgn(b[pivot][c]) != 0) b[pivot][c] *= inv;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == pivot || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < n; ++c)
        if (sgn(a[pivot][c]) != 0) a[r][c] -= f * a[pivot][c];
      for (std::size_t c = 0; c < m; ++c)
        if (sgn(b[pivot][c]) != 0) b[r][c] -= f * b[pivot][c];
    }
  }

  std::vector<std::vector<Rational>> x(n, std::vector<Rational>(m));
  for (std::size_t col = 0; col < n; ++col) x[col] = b[row_of[col]];
  return x;
}

/// Transient states from which some absorbing state is reachable.
inline std::vector<bool> can_absorb(const AbsorbingChain& chain) {
  const std::size_t n = chain.size();
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<bool> good(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : chain[i].out) preds[t.target].push_back(i);
    if (chain[i].outcome) { good[i] = true; queue.push_back(i); }
  }
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (auto p : preds[s])
      if (!good[p]) { good[p] = true; queue.push_back(p); }
  }
  return good;
}

struct ChainSolution {
  std::vector<OutcomeDistribution> per_state;
};

inline ChainSolution solve_absorption(const AbsorbingChain& chain) {
  const std::size_t n = chain.size();
  const auto good = can_absorb(chain);
  std::vector<std::size_t> var(n, n);
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (!chain[i].outcome && good[i]) { var[i] = vars.size(); vars.push_back(i); }

  const std::size_t k = vars.size();
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
  std::vector<std::vector<Rational>> b(k, std::vector<Rational>(3));
  for (std::size_t r = 0; r < k; ++r) {
    const auto& s = chain[vars[r]];
    a[r][r] += 1;
    for (const auto& t : s.out) {
      const auto& dest = chain[t.target];
      if (dest.outcome)
        b[r][static_cast<std::size_t>(*dest.outcome)] += t.probability;
      else if (var[t.target] != n)
        a[r][var[t.target]] -= t.probability;
    }
  }
  auto x = solve_exact(std::move(a), std::move(b));

  ChainSolution sol;
  sol.per_state.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& d = sol.per_state[i];
    if (chain[i].outcome) {
      switch (*chain[i].outcome) {
        case Outcome::alice_win: d.alice_win = 1; break;
        case Outcome::bob_win: d.bob_win = 1; break;
        case Outcome::tie: d.tie = 1; break;
      }
    } else if (var[i] != n) {
      d.alice_win = x[var[i]][0];
      d.bob_win = x[var[i]][1];
      d.tie = x[var[i]][2];
    }
    d.infinite = 1 - d.alice_win - d.bob_win - d.tie;
  }
  return sol;
}

}  // namespace detail

/// Exact probability of ending in each outcome from `start`; mass that never
/// reaches an absorbing state is reported as `infinite`.
inline OutcomeDistribution absorption_probabilities(const AbsorbingChain& chain,
                                                    std::size_t start) {
  if (start >= chain.size())
    throw Error(ErrorKind::invalid_argument, "start state out of range");
  return detail::solve_absorption(chain).per_state[start];
}

inline OutcomeDistribution absorption_probabilities(const AbsorbingChain& chain) {
  return absorption_probabilities(chain, chain.start());
}

/// Expected number of steps until absorption. Requires absorption with
/// probability one from `start`.
inline Rational expected_absorption_time(const AbsorbingChain& chain,
                                         std::size_t start) {
  if (start >= chain.size())
    throw Error(ErrorKind::invalid_argument, "start state out of range");
  if (sgn(absorption_probabilities(chain, start).infinite) != 0)
    throw Error(ErrorKind::invalid_argument,
                "expected time is infinite: the chain may never absorb");
  if (chain[start].outcome) return 0;

  // Every state reachable from start absorbs with probability one here.
  std::vector<std::size_t> var(chain.size(), chain.size());
  std::vector<std::size_t> vars;
  std::deque<std::size_t> queue{start};
  var[start] = 0;
  vars.push_back(start);
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (const auto& t : chain[s].out) {
      if (chain[t.target].outcome || var[t.target] != chain.size()) continue;
      var[t.target] = vars.size();
      vars.push_back(t.target);
      queue.push_back(t.target);
    }
  }
  const std::size_t k = vars.size();
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
  std::vector<std::vector<Rational>> b(k, std::vector<Rational>(1, Rational(1)));
  for (std::size_t r = 0; r < k; ++r) {
    a[r][r] += 1;
    for (const auto& t : chain[vars[r]].out)
      if (!chain[t.target].outcome) a[r][var[t.target]] -= t.probability;
  }
  return detail::solve_exact(std::move(a), std::move(b))[0][0];
}

inline Rational expected_absorption_time(const AbsorbingChain& chain) {
  return expected_absorption_time(chain, chain.start());
}

/// Chain that reads fair characters until `automaton` accepts once. The
/// absorbing state carries the alice_win label.
inline AbsorbingChain single_word_chain(const PrefixAutomaton& automaton) {
  using Key = std::size_t;
  const Rational half(1, 2);
  return explore_chain(
      Key{0},
      [&](Key s) -> Expansion<Key> {
        if (s == automaton.accept()) return Outcome::alice_win;
        return std::vector<std::pair<Key, Rational>>{
            {automaton.next(s, 'H'), half}, {automaton.next(s, 'T'), half}};
      },
      [](Key s) { return "progress " + std::to_string(s); });
}

enum class RaceRule { shared_sequence, independent_coins };

/// Occurrence targets for a race; (1, 1) is first occurrence.
struct OccurrenceTargets {
  unsigned alice = 1;
  unsigned bob = 1;
};

/// Race between two words of equal length.
///
/// shared_sequence: one fair character per step feeds both automata; a
/// player wins when their occurrence count (overlaps counted) reaches their
/// target. Distinct words of equal length never end at the same position, so
/// simultaneous completion is reported as an internal error.
///
/// independent_coins: each player reads their own fair character per step;
/// finishing on the same step is a tie. Targets must be (1, 1).
inline AbsorbingChain product_chain(const PrefixAutomaton& alice,
                                    const PrefixAutomaton& bob, RaceRule rule,
                                    OccurrenceTargets targets = {}) {
  require_same_length(alice.word(), bob.word());
  if (targets.alice < 1 || targets.bob < 1)
    throw Error(ErrorKind::invalid_argument, "occurrence targets must be >= 1");
  const std::size_t n = alice.accept();

  if (rule == RaceRule::independent_coins) {
    if (targets.alice != 1 || targets.bob != 1)
      throw Error(ErrorKind::invalid_argument,
                  "independent coins support first occurrence only");
    using Key = std::array<std::size_t, 2>;
    const Rational quarter(1, 4);
    return explore_chain(
        Key{0, 0},
        [&, n](const Key& s) -> Expansion<Key> {
          const bool a = s[0] == n, b = s[1] == n;
          if (a && b) return Outcome::tie;
          if (a) return Outcome::alice_win;
          if (b) return Outcome::bob_win;
          std::vector<std::pair<Key, Rational>> out;
          for (char ca : {'H', 'T'})
            for (char cb : {'H', 'T'})
              out.push_back({Key{alice.next(s[0], ca), bob.next(s[1], cb)}, quarter});
          return out;
        },
        [](const Key& s) {
          return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + ")";
        });
  }

  if (alice.word() == bob.word())
    throw Error(ErrorKind::invalid_argument,
                "a shared-sequence race needs two different words");
  // (progress A, progress B, occurrences A, occurrences B)
  using Key = std::array<std::size_t, 4>;
  const Rational half(1, 2);
  return explore_chain(
      Key{0, 0, 0, 0},
      [&, n, targets](const Key& s) -> Expansion<Key> {
        const bool a = s[2] == targets.alice, b = s[3] == targets.bob;
        if (a && b)
          throw Error(ErrorKind::internal,
                      "simultaneous completion in a shared-sequence race");
        if (a) return Outcome::alice_win;
        if (b) return Outcome::bob_win;
        std::vector<std::pair<Key, Rational>> out;
        for (char c : {'H', 'T'}) {
          Key t{alice.next(s[0], c), bob.next(s[1], c), s[2], s[3]};
          if (t[0] == n) ++t[2];
          if (t[1] == n) ++t[3];
          out.push_back({t, half});
        }
        return out;
      },
      [](const Key& s) {
        return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
               std::to_string(s[2]) + "," + std::to_string(s[3]) + ")";
      });
}

}  // namespace penney
