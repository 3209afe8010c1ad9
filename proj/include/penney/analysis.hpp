#pragma once

// Whole-table generation and what can be read off the tables: best choices,
// best-response and "beats" graphs with their cycles, and pairs where the
// word with the longer expected wait wins anyway.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "penney/error.hpp"
#include "penney/rational.hpp"
#include "penney/timing.hpp"
#include "penney/variants.hpp"
#include "penney/word.hpp"

namespace penney {

inline constexpr std::size_t min_table_length = 2;
inline constexpr std::size_t max_table_length = 6;

inline void require_table_length(std::size_t n) {
  if (n < min_table_length || n > max_table_length)
    throw Error(ErrorKind::oversize,
                "table length n=" + std::to_string(n) + " out of range; supported " +
                    std::to_string(min_table_length) + " <= n <= " +
                    std::to_string(max_table_length));
}

using WordPair = std::pair<BinaryWord, BinaryWord>;  // (alice, bob)

struct GameTable {
  GameVariant variant;
  std::size_t n = 0;
  std::map<WordPair, OutcomeDistribution> cells;

  const OutcomeDistribution& at(const BinaryWord& alice, const BinaryWord& bob) const {
    auto it = cells.find({alice, bob});
    if (it == cells.end())
      throw Error(ErrorKind::invalid_argument,
                  "no cell for " + alice.str() + " vs " + bob.str());
    return it->second;
  }
  const OutcomeDistribution& at(std::string_view alice, std::string_view bob) const {
    return at(BinaryWord(alice), BinaryWord(bob));
  }
};

/// Every admissible ordered pair of length-n words. Cells are independent and
/// are spread over `workers` threads (0 = hardware concurrency); the result
/// does not depend on the schedule.
inline GameTable full_table(const GameVariant& variant, std::size_t n,
                            unsigned workers = 1) {
  require_table_length(n);
  const auto words = all_words(n);
  std::vector<WordPair> pairs;
  for (const auto& a : words)
    for (const auto& b : words)
      if (a != b || variant.allows_equal_words()) pairs.push_back({a, b});

  std::vector<OutcomeDistribution> values(pairs.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, pairs.size()));

  if (workers <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      values[i] = evaluate(variant, pairs[i].first, pairs[i].second);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();)
            values[i] = evaluate(variant, pairs[i].first, pairs[i].second);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  GameTable table{variant, n, {}};
  for (std::size_t i = 0; i < pairs.size(); ++i)
    table.cells.emplace(std::move(pairs[i]), std::move(values[i]));
  return table;
}

/// Alice words shown by default: those starting with H.
inline std::vector<BinaryWord> alice_words(std::size_t n, bool all) {
  std::vector<BinaryWord> out;
  for (auto& w : all_words(n))
    if (all || w[0] == 'H') out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------
// Best choices

struct BestChoiceRow {
  BinaryWord alice;
  std::vector<BinaryWord> best;  // every word attaining Bob's best odds
  Rational bob_win;
  Odds odds;  // Bob's win : Alice's win
};

/// Bob's standing in a cell, ordered by his odds. A certain win ranks above
/// any finite odds; a cell neither player can win counts as even.
struct BobStanding {
  int tier = 1;
  Rational ratio = 1;

  explicit BobStanding(const OutcomeDistribution& d) {
    if (sgn(d.alice_win) > 0) ratio = d.bob_win / d.alice_win;
    else if (sgn(d.bob_win) > 0) { tier = 2; ratio = 0; }
  }
  friend bool operator==(const BobStanding&, const BobStanding&) = default;
  friend bool operator<(const BobStanding& x, const BobStanding& y) {
    return x.tier != y.tier ? x.tier < y.tier : x.ratio < y.ratio;
  }
};

inline Odds bob_odds(const OutcomeDistribution& d) {
  if (sgn(d.bob_win) == 0 && sgn(d.alice_win) == 0) return Odds{0, 0};
  return odds_of(d.bob_win, d.alice_win);
}

/// Bob's best replies to each Alice word, ranked by his odds.
inline std::vector<BestChoiceRow> best_choice_table(const GameTable& table,
                                                    bool all_alice = false) {
  std::vector<BestChoiceRow> rows;
  for (const auto& alice : alice_words(table.n, all_alice)) {
    BestChoiceRow row{alice, {}, 0, {}};
    std::optional<BobStanding> top;
    for (const auto& [pair, d] : table.cells) {
      if (pair.first != alice) continue;
      const BobStanding s(d);
      if (!top || *top < s) {
        top = s;
        row.best = {pair.second};
        row.bob_win = d.bob_win;
        row.odds = bob_odds(d);
      } else if (s == *top) {
        row.best.push_back(pair.second);
      }
    }
    if (row.best.empty())
      throw Error(ErrorKind::internal, "no candidates for " + alice.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<BestChoiceRow> best_choice_table(const GameVariant& variant,
                                                    std::size_t n,
                                                    bool all_alice = false) {
  return best_choice_table(full_table(variant, n), all_alice);
}

// ---------------------------------------------------------------------------
// Graphs and cycles

/// Directed graph over words; arcs are kept sorted.
struct WordGraph {
  std::vector<BinaryWord> nodes;
  std::map<BinaryWord, std::set<BinaryWord>> arcs;

  bool has_arc(const BinaryWord& from, const BinaryWord& to) const {
    auto it = arcs.find(from);
    return it != arcs.end() && it->second.count(to) != 0;
  }
  bool has_arc(std::string_view from, std::string_view to) const {
    return has_arc(BinaryWord(from), BinaryWord(to));
  }
  std::size_t arc_count() const {
    std::size_t c = 0;
    for (auto& [_, s] : arcs) c += s.size();
    return c;
  }
};

/// Arcs from every Alice word to each of Bob's best choices against it.
inline WordGraph best_response_graph(const GameTable& table) {
  WordGraph g{all_words(table.n), {}};
  for (const auto& row : best_choice_table(table, true))
    for (const auto& b : row.best)
      if (b != row.alice) g.arcs[row.alice].insert(b);
  return g;
}

/// Arc X -> Y iff Bob holding Y beats Alice holding X with probability > 1/2.
inline WordGraph beats_graph(const GameTable& table) {
  WordGraph g{all_words(table.n), {}};
  const Rational half(1, 2);
  for (const auto& [pair, d] : table.cells)
    if (pair.first != pair.second && d.bob_win > half)
      g.arcs[pair.first].insert(pair.second);
  return g;
}

using Cycle = std::vector<BinaryWord>;

struct CycleReport {
  std::vector<Cycle> cycles;  // sorted by length, then lexicographically
  bool truncated = false;
};

/// Simple cycles of length 2..max_length. Each cycle starts at its smallest
/// word, so every cycle appears once.
inline CycleReport find_cycles(const WordGraph& g, std::size_t max_length = 8,
                               std::size_t max_cycles = 10000) {
  CycleReport report;
  Cycle path;
  std::set<BinaryWord> on_path;

  auto dfs = [&](auto&& self, const BinaryWord& start, const BinaryWord& at) -> void {
    if (report.truncated) return;
    auto it = g.arcs.find(at);
    if (it == g.arcs.end()) return;
    for (const auto& next : it->second) {
      if (next == start && path.size() >= 2) {
        if (report.cycles.size() >= max_cycles) { report.truncated = true; return; }
        report.cycles.push_back(path);
      } else if (next > start && !on_path.count(next) && path.size() < max_length) {
        path.push_back(next);
        on_path.insert(next);
        self(self, start, next);
        on_path.erase(next);
        path.pop_back();
      }
    }
  };

  for (const auto& start : g.nodes) {
    path = {start};
    on_path = {start};
    dfs(dfs, start, start);
  }
  std::sort(report.cycles.begin(), report.cycles.end(),
            [](const Cycle& a, const Cycle& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return report;
}

inline std::string to_string(const Cycle& c) {
  std::string s;
  for (const auto& w : c) s += w.str() + " -> ";
  return s + c.front().str();
}

// ---------------------------------------------------------------------------
// Wait-time anomalies

struct AnomalyRow {
  bool alice_wins = true;  // the winner, which holds the longer wait
  BinaryWord alice;
  BinaryWord bob;
  std::uint64_t alice_wait = 0;
  std::uint64_t bob_wait = 0;

  friend bool operator==(const AnomalyRow&, const AnomalyRow&) = default;
};

/// Bob's effective expected wait: one more flip in the head-start game.
inline std::uint64_t bob_effective_wait(const GameVariant& v, const BinaryWord& bob) {
  return expected_wait_time(bob) + (v.tag == VariantTag::head_start ? 1 : 0);
}

/// Pairs where the word with strictly longer expected wait wins with
/// probability > 1/2.
inline std::vector<AnomalyRow> wait_time_anomalies(const GameTable& table,
                                                   bool all_alice = false) {
  std::vector<AnomalyRow> rows;
  const Rational half(1, 2);
  for (const auto& [pair, d] : table.cells) {
    const auto& [alice, bob] = pair;
    if (alice == bob || (!all_alice && alice[0] != 'H')) continue;
    const auto wa = expected_wait_time(alice);
    const auto wb = bob_effective_wait(table.variant, bob);
    if (wa > wb && d.alice_win > half) rows.push_back({true, alice, bob, wa, wb});
    if (wb > wa && d.bob_win > half) rows.push_back({false, alice, bob, wa, wb});
  }
  return rows;
}

inline std::vector<AnomalyRow> wait_time_anomalies(const GameVariant& variant,
                                                   std::size_t n,
                                                   bool all_alice = false) {
  return wait_time_anomalies(full_table(variant, n), all_alice);
}

/// Head-start pair Alice = H^n, Bob = H^(n-1)T. Winner read off the exact
/// evaluation.
inline AnomalyRow head_start_extreme_family(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "need n >= 3");
  if (n > BinaryWord::max_length) throw Error(ErrorKind::oversize, "n too large");
  const BinaryWord alice(std::string(n, 'H'));
  const BinaryWord bob(std::string(n - 1, 'H') + "T");
  const auto d = head_start_probabilities(alice, bob);
  return {d.alice_win > d.bob_win, alice, bob, expected_wait_time(alice),
          bob_effective_wait(GameVariant::head_start(), bob)};
}

// ---------------------------------------------------------------------------
// Two-coin tables grouped by autocorrelation class

struct CorrelationClass {
  std::string label;  // autocorrelation bits, e.g. "101"
  std::vector<BinaryWord> members;
};

/// Classes ordered by decreasing leading number ("111", "101", "100").
inline std::vector<CorrelationClass> correlation_classes(std::size_t n) {
  std::map<std::string, std::vector<BinaryWord>, std::greater<>> grouped;
  for (auto& w : all_words(n)) grouped[autocorrelation(w).label()].push_back(w);
  std::vector<CorrelationClass> out;
  for (auto& [label, members] : grouped) out.push_back({label, members});
  return out;
}

struct ClassTable {
  std::size_t n = 0;
  std::vector<CorrelationClass> classes;
  std::map<std::pair<std::string, std::string>, OutcomeDistribution> cells;  // (alice, bob)
};

/// Groups a two-coin table by the players' autocorrelation classes. Every
/// member pair of a class pair must agree; a disagreement is an error.
inline ClassTable group_by_correlation(const GameTable& table) {
  if (table.variant.tag != VariantTag::two_coin)
    throw Error(ErrorKind::invalid_argument, "grouping applies to two_coin tables");
  ClassTable out{table.n, correlation_classes(table.n), {}};
  for (const auto& [pair, d] : table.cells) {
    std::pair<std::string, std::string> key{autocorrelation(pair.first).label(),
                                            autocorrelation(pair.second).label()};
    auto [it, fresh] = out.cells.emplace(key, d);
    if (!fresh && !(it->second == d))
      throw Error(ErrorKind::internal, "two-coin cell depends on more than "
                                       "autocorrelation: " +
                                           pair.first.str() + " vs " + pair.second.str());
  }
  return out;
}

}  // namespace penney
