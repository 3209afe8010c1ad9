#pragma once

// Text, CSV and JSON renderings of results. Fractions are always exact
// "p/q" strings; text output may add decimals next to them.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "penney/analysis.hpp"
#include "penney/error.hpp"
#include "penney/rational.hpp"
#include "penney/simulate.hpp"
#include "penney/timing.hpp"
#include "penney/variants.hpp"
#include "penney/word.hpp"

namespace penney {

enum class OutputFormat { text, csv, json };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw Error(ErrorKind::invalid_argument, "unknown format '" + std::string(s) + "'");
}

namespace render {

using nlohmann::ordered_json;

/// Four significant digits, for text mode.
inline std::string approx(const Rational& r) { return to_decimal(r, 4); }

/// The fixed cell schema.
inline ordered_json cell_json(const GameVariant& v, const BinaryWord& alice,
                              const BinaryWord& bob, const OutcomeDistribution& d) {
  return ordered_json{{"variant", to_string(v)},     {"n", alice.size()},
                      {"alice", alice.str()},        {"bob", bob.str()},
                      {"alice_win", to_string(d.alice_win)}, {"bob_win", to_string(d.bob_win)},
                      {"tie", to_string(d.tie)},     {"infinite", to_string(d.infinite)}};
}

inline const char* csv_header() { return "variant,n,alice,bob,alice_win,bob_win,tie,infinite"; }

inline std::string cell_csv(const GameVariant& v, const BinaryWord& alice,
                            const BinaryWord& bob, const OutcomeDistribution& d) {
  std::ostringstream s;
  s << to_string(v) << ',' << alice.size() << ',' << alice.str() << ',' << bob.str() << ','
    << to_string(d.alice_win) << ',' << to_string(d.bob_win) << ',' << to_string(d.tie)
    << ',' << to_string(d.infinite);
  return s.str();
}

// ---------------------------------------------------------------------------
// odds

/// "Bob 3/8, Alice 5/8, odds 3 to 5" plus a tie/infinite part when nonzero.
inline std::string odds_line(const OutcomeDistribution& d) {
  std::string s = "Bob " + to_string(d.bob_win) + ", Alice " + to_string(d.alice_win);
  if (sgn(d.tie) != 0) s += ", Tie " + to_string(d.tie);
  if (sgn(d.infinite) != 0) s += ", Infinite " + to_string(d.infinite);
  if (sgn(d.bob_win) != 0 || sgn(d.alice_win) != 0)
    s += ", odds " + to_string(odds_of(d.bob_win, d.alice_win));
  return s;
}

inline std::string odds(const GameVariant& v, const BinaryWord& alice, const BinaryWord& bob,
                        const OutcomeDistribution& d, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: {
      auto j = cell_json(v, alice, bob, d);
      if (sgn(d.bob_win) != 0 || sgn(d.alice_win) != 0)
        j["odds"] = to_string(odds_of(d.bob_win, d.alice_win));
      return j.dump(2) + "\n";
    }
    case OutputFormat::csv:
      return std::string(csv_header()) + "\n" + cell_csv(v, alice, bob, d) + "\n";
    case OutputFormat::text: break;
  }
  std::ostringstream s;
  s << odds_line(d) << "\n";
  s << "variant " << to_string(v) << ": Alice " << alice.str() << " vs Bob " << bob.str()
    << " (Bob " << approx(d.bob_win) << ", Alice " << approx(d.alice_win);
  if (sgn(d.tie) != 0) s << ", Tie " << approx(d.tie);
  s << ")\n";
  return s.str();
}

// ---------------------------------------------------------------------------
// tables

namespace detail {

inline std::string grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream s;
  for (auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::string cell = r[c];
      if (c + 1 < r.size()) cell.resize(width[c], ' ');
      line += cell;
      if (c + 1 < r.size()) line += " | ";
    }
    s << line << "\n";
  }
  return s.str();
}

inline std::string cell_text(const GameVariant& v, const OutcomeDistribution& d,
                             const BinaryWord& alice, const BinaryWord& bob) {
  switch (v.tag) {
    case VariantTag::post_a_bobalyptic:
    case VariantTag::two_coin:
      return to_string(d.bob_win) + ", " + to_string(d.alice_win) + ", " + to_string(d.tie);
    case VariantTag::no_flippancy: {
      const auto r = no_flippancy_play(alice, bob);
      return r.display() + " (" + to_string(r.outcome) +
             (r.turns ? ", " + std::to_string(*r.turns) : "") + ")";
    }
    default: return to_string(d.bob_win);
  }
}

}  // namespace detail

/// Alice's words across the top, Bob's down the side.
inline std::string table_text(const GameTable& t, bool all_alice = false) {
  const auto cols = alice_words(t.n, all_alice);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"Bob \\ Alice"};
  for (auto& a : cols) head.push_back(a.str());
  rows.push_back(head);
  for (auto& b : all_words(t.n)) {
    std::vector<std::string> r{b.str()};
    for (auto& a : cols) {
      auto it = t.cells.find({a, b});
      r.push_back(it == t.cells.end() ? "*" : detail::cell_text(t.variant, it->second, a, b));
    }
    rows.push_back(r);
  }
  std::string caption;
  switch (t.variant.tag) {
    case VariantTag::post_a_bobalyptic:
    case VariantTag::two_coin: caption = "cells: Bob win, Alice win, tie"; break;
    case VariantTag::no_flippancy: caption = "cells: output (winner, turns)"; break;
    default: caption = "cells: Bob's probability of winning"; break;
  }
  return to_string(t.variant) + ", n = " + std::to_string(t.n) + " (" + caption + ")\n" +
         detail::grid(rows);
}

inline std::string table_csv(const GameTable& t) {
  std::string s = std::string(csv_header()) + "\n";
  for (auto& [pair, d] : t.cells) s += cell_csv(t.variant, pair.first, pair.second, d) + "\n";
  return s;
}

inline std::string table_json(const GameTable& t) {
  ordered_json arr = ordered_json::array();
  for (auto& [pair, d] : t.cells) arr.push_back(cell_json(t.variant, pair.first, pair.second, d));
  return arr.dump(2) + "\n";
}

/// Two-coin table keyed by autocorrelation class; cells are Bob win, Alice
/// win, tie. With approx_digits > 0 the values are decimals rounded
/// half-to-even, without the leading zero.
inline std::string class_table_text(const ClassTable& t, int approx_digits = 0) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"Bob \\ Alice"};
  for (auto& c : t.classes) head.push_back(c.label);
  rows.push_back(head);
  auto fmt = [&](const Rational& r) {
    return approx_digits > 0 ? to_decimal(r, approx_digits, false) : to_string(r);
  };
  for (auto& rb : t.classes) {
    std::vector<std::string> r{rb.label};
    for (auto& ca : t.classes) {
      const auto& d = t.cells.at({ca.label, rb.label});
      r.push_back(fmt(d.bob_win) + ", " + fmt(d.alice_win) + ", " + fmt(d.tie));
    }
    rows.push_back(r);
  }
  std::string members;
  for (auto& c : t.classes) {
    members += "  " + c.label + ":";
    for (auto& w : c.members) members += " " + w.str();
    members += "\n";
  }
  return detail::grid(rows) + "classes:\n" + members;
}

// ---------------------------------------------------------------------------
// best choices

inline std::string best_choices(const GameVariant& v, const std::vector<BestChoiceRow>& rows,
                                OutputFormat f) {
  auto joined = [](const std::vector<BinaryWord>& ws, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? sep : "") + ws[i].str();
    return s;
  };
  if (f == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (auto& r : rows) {
      ordered_json best = ordered_json::array();
      for (auto& b : r.best) best.push_back(b.str());
      arr.push_back({{"variant", to_string(v)},
                     {"alice", r.alice.str()},
                     {"best", best},
                     {"bob_win", to_string(r.bob_win)},
                     {"odds", to_string(r.odds)}});
    }
    return arr.dump(2) + "\n";
  }
  if (f == OutputFormat::csv) {
    std::string s = "variant,alice,best,bob_win,odds\n";
    for (auto& r : rows)
      s += to_string(v) + "," + r.alice.str() + "," + joined(r.best, " ") + "," +
           to_string(r.bob_win) + "," + to_string(r.odds) + "\n";
    return s;
  }
  std::vector<std::vector<std::string>> g{{"Alice", "Bob's best choice", "Bob's odds"}};
  for (auto& r : rows) g.push_back({r.alice.str(), joined(r.best, ", "), to_string(r.odds)});
  return detail::grid(g);
}

// ---------------------------------------------------------------------------
// anomalies

inline std::string anomalies(const std::vector<AnomalyRow>& rows, OutputFormat f) {
  if (f == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (auto& r : rows)
      arr.push_back({{"winner", r.alice_wins ? "alice" : "bob"},
                     {"alice", r.alice.str()},
                     {"bob", r.bob.str()},
                     {"alice_wait", r.alice_wait},
                     {"bob_wait", r.bob_wait}});
    return arr.dump(2) + "\n";
  }
  if (f == OutputFormat::csv) {
    std::string s = "winner,alice,bob,alice_wait,bob_wait\n";
    for (auto& r : rows)
      s += std::string(r.alice_wins ? "alice" : "bob") + "," + r.alice.str() + "," +
           r.bob.str() + "," + std::to_string(r.alice_wait) + "," +
           std::to_string(r.bob_wait) + "\n";
    return s;
  }
  if (rows.empty()) return "no anomalies\n";
  std::vector<std::vector<std::string>> g{{"Winner", "Alice", "Bob", "Wait time"}};
  for (auto& r : rows)
    g.push_back({r.alice_wins ? "Alice" : "Bob", r.alice.str(), r.bob.str(),
                 "(" + std::to_string(r.alice_wait) + ", " + std::to_string(r.bob_wait) + ")"});
  return detail::grid(g);
}

// ---------------------------------------------------------------------------
// cycles

inline std::string cycles(const CycleReport& report, OutputFormat f) {
  if (f == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (auto& c : report.cycles) {
      ordered_json words = ordered_json::array();
      for (auto& w : c) words.push_back(w.str());
      arr.push_back(words);
    }
    return ordered_json{{"cycles", arr}, {"truncated", report.truncated}}.dump(2) + "\n";
  }
  std::string s;
  if (f == OutputFormat::csv) s = "length,cycle\n";
  for (auto& c : report.cycles) {
    if (f == OutputFormat::csv) {
      s += std::to_string(c.size()) + ",";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + c[i].str();
      s += "\n";
    } else {
      s += "[" + std::to_string(c.size()) + "] " + to_string(c) + "\n";
    }
  }
  if (f == OutputFormat::text) {
    if (report.cycles.empty()) s += "no cycles\n";
    if (report.truncated) s += "(truncated)\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// waittime and sequences

inline std::string wait_time(const BinaryWord& w, OutputFormat f) {
  const auto v = autocorrelation(w);
  const auto cln = conway_leading_number(v).value;
  const auto wait = expected_wait_time(w);
  if (f == OutputFormat::json)
    return ordered_json{{"word", w.str()},
                        {"autocorrelation", v.label()},
                        {"cln", cln},
                        {"wait", wait}}
               .dump(2) +
           "\n";
  if (f == OutputFormat::csv)
    return "word,autocorrelation,cln,wait\n" + w.str() + "," + v.label() + "," +
           std::to_string(cln) + "," + std::to_string(wait) + "\n";
  return w.str() + ": autocorrelation " + v.label() + ", CLN " + std::to_string(cln) +
         ", wait " + std::to_string(wait) + "\n";
}

inline std::string sequence(const FirstTimerSequence& seq, bool series_matches,
                            OutputFormat f) {
  const auto meta = known_sequence(seq.word);
  const bool recurrence_ok = meta && verify_recurrence(seq, *meta);
  if (f == OutputFormat::json) {
    ordered_json terms = ordered_json::array();
    for (auto& t : seq.terms) terms.push_back(t.get_str());
    ordered_json j{{"word", seq.word.str()},
                   {"autocorrelation", autocorrelation(seq.word).label()},
                   {"terms", terms},
                   {"generating_function_matches", series_matches}};
    if (meta)
      j["oeis"] = {{"id", meta->oeis},
                   {"name", meta->name},
                   {"recurrence", meta->formula()},
                   {"verified", recurrence_ok}};
    return j.dump(2) + "\n";
  }
  if (f == OutputFormat::csv) {
    std::string s = "i,a_i\n";
    for (std::size_t i = 1; i <= seq.size(); ++i)
      s += std::to_string(i) + "," + seq.term(i).get_str() + "\n";
    return s;
  }
  std::string s = seq.word.str() + "-first-timer sequence: ";
  for (std::size_t i = 1; i <= seq.size(); ++i) s += (i > 1 ? "," : "") + seq.term(i).get_str();
  s += "\ngenerating function: " + std::string(series_matches ? "matches" : "MISMATCH") + "\n";
  if (meta)
    s += "OEIS " + meta->oeis + " (" + meta->name + "), " + meta->formula() + ": " +
         (recurrence_ok ? "verified" : "FAILS") + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// play

inline std::string play(const BinaryWord& alice, const BinaryWord& bob,
                        const NoFlippancyResult& r, OutputFormat f) {
  if (f == OutputFormat::json) {
    ordered_json trace = ordered_json::array();
    for (auto& t : r.trace)
      trace.push_back({{"mover", t.alice_moved ? "alice" : "bob"},
                       {"emitted", std::string(1, t.emitted)},
                       {"alice_progress", t.alice_progress},
                       {"bob_progress", t.bob_progress}});
    ordered_json j{{"alice", alice.str()}, {"bob", bob.str()}, {"outcome", to_string(r.outcome)}};
    if (r.infinite()) {
      j["preperiod"] = r.preperiod;
      j["period"] = r.period;
    } else {
      j["output"] = r.output;
      j["turns"] = *r.turns;
    }
    j["trace"] = trace;
    return j.dump(2) + "\n";
  }
  if (f == OutputFormat::csv) {
    std::string s = "turn,mover,emitted,alice_progress,bob_progress\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      auto& t = r.trace[i];
      s += std::to_string(i + 1) + "," + (t.alice_moved ? "alice" : "bob") + "," +
           std::string(1, t.emitted) + "," + std::to_string(t.alice_progress) + "," +
           std::to_string(t.bob_progress) + "\n";
    }
    return s;
  }
  std::string s;
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    auto& t = r.trace[i];
    s += "turn " + std::to_string(i + 1) + ": " + (t.alice_moved ? "Alice" : "Bob  ") + " -> " +
         t.emitted + "  progress (" + std::to_string(t.alice_progress) + ", " +
         std::to_string(t.bob_progress) + ")\n";
  }
  if (r.infinite())
    s += "infinite: preperiod \"" + r.preperiod + "\", period \"" + r.period + "\" (" +
         r.display() + ")\n";
  else
    s += to_string(r.outcome) + " wins in " + std::to_string(*r.turns) + ": " + r.output + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// simulate

inline std::string simulation(const SimulationReport& r, OutputFormat f) {
  const auto z = r.z_scores();
  auto zs = [](const std::optional<double>& v) {
    if (!v) return std::string("n/a");
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << *v;
    return s.str();
  };
  auto fr = [&](std::uint64_t c) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(6);
    s << r.frequency(c);
    return s.str();
  };
  if (f == OutputFormat::json) {
    ordered_json j{{"variant", to_string(r.variant)},
                   {"alice", r.alice.str()},
                   {"bob", r.bob.str()},
                   {"trials", r.trials},
                   {"seed", r.seed},
                   {"workers", r.workers},
                   {"counts",
                    {{"alice_win", r.counts.alice},
                     {"bob_win", r.counts.bob},
                     {"tie", r.counts.tie},
                     {"aborted", r.counts.aborted}}},
                   {"frequency",
                    {{"alice_win", fr(r.counts.alice)},
                     {"bob_win", fr(r.counts.bob)},
                     {"tie", fr(r.counts.tie)}}},
                   {"exact",
                    {{"alice_win", to_string(r.exact.alice_win)},
                     {"bob_win", to_string(r.exact.bob_win)},
                     {"tie", to_string(r.exact.tie)}}},
                   {"z",
                    {{"alice_win", zs(z[0])}, {"bob_win", zs(z[1])}, {"tie", zs(z[2])}}}};
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> g{{"outcome", "count", "frequency", "exact", "z"}};
  g.push_back({"alice_win", std::to_string(r.counts.alice), fr(r.counts.alice),
               to_string(r.exact.alice_win), zs(z[0])});
  g.push_back({"bob_win", std::to_string(r.counts.bob), fr(r.counts.bob),
               to_string(r.exact.bob_win), zs(z[1])});
  g.push_back({"tie", std::to_string(r.counts.tie), fr(r.counts.tie), to_string(r.exact.tie),
               zs(z[2])});
  if (f == OutputFormat::csv) {
    std::string s = "outcome,count,frequency,exact,z\n";
    for (std::size_t i = 1; i < g.size(); ++i)
      s += g[i][0] + "," + g[i][1] + "," + g[i][2] + "," + g[i][3] + "," + g[i][4] + "\n";
    return s;
  }
  std::string head = to_string(r.variant) + ": Alice " + r.alice.str() + " vs Bob " +
                     r.bob.str() + ", " + std::to_string(r.trials) + " trials, seed " +
                     std::to_string(r.seed) + ", workers " + std::to_string(r.workers) + "\n";
  std::string tail = r.counts.aborted ? "aborted trials: " + std::to_string(r.counts.aborted) + "\n"
                                      : std::string();
  return head + detail::grid(g) + tail;
}

}  // namespace render
}  // namespace penney
