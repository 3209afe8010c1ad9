#pragma once

// First-timer sequences, first-occurrence probabilities, the generating
// function of first-timer counts, expected wait times, and linear recurrence
// checks.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "penney/chain.hpp"
#include "penney/error.hpp"
#include "penney/rational.hpp"
#include "penney/word.hpp"

namespace penney {

/// a_1, a_2, ..., a_m: a_i counts strings of length i whose only occurrence
/// of the word is as their suffix.
struct FirstTimerSequence {
  BinaryWord word;
  std::vector<BigInt> terms;  // terms[i - 1] == a_i

  std::size_t size() const noexcept { return terms.size(); }
  const BigInt& term(std::size_t i) const { return terms.at(i - 1); }
};

/// Exact counts by dynamic programming over the word's prefix automaton with
/// the accept state absorbing.
inline FirstTimerSequence first_timer_sequence(const BinaryWord& w,
                                               std::size_t m) {
  if (m < w.size())
    throw Error(ErrorKind::invalid_argument,
                "need at least " + std::to_string(w.size()) + " terms");
  const PrefixAutomaton automaton(w);
  const std::size_t n = automaton.accept();
  std::vector<BigInt> live(n, 0);  // strings not yet containing w, by state
  live[0] = 1;
  FirstTimerSequence seq{w, {}};
  seq.terms.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<BigInt> next(n, 0);
    BigInt finished = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (live[s] == 0) continue;
      for (char c : {'H', 'T'}) {
        const std::size_t t = automaton.next(s, c);
        if (t == n)
          finished += live[s];
        else
          next[t] += live[s];
      }
    }
    seq.terms.push_back(finished);
    live = std::move(next);
  }
  return seq;
}

/// p_i = a_i / 2^i.
inline Rational first_occurrence_probability(const BinaryWord& w,
                                             std::size_t i) {
  if (i < 1) throw Error(ErrorKind::invalid_argument, "index must be >= 1");
  if (i < w.size()) return 0;
  return make_rational(first_timer_sequence(w, i).term(i), pow2(static_cast<unsigned>(i)));
}

/// Numerator and denominator of G(z) = z^k / (z^k + (1 - 2z) c(z)) as
/// coefficient lists, lowest degree first.
inline std::pair<std::vector<Rational>, std::vector<Rational>>
generating_function_polynomials(const BinaryWord& w) {
  const std::size_t k = w.size();
  const auto c = autocorrelation(w);
  std::vector<Rational> num(k + 1, 0);
  num[k] = 1;
  std::vector<Rational> den(k + 1, 0);
  den[k] += 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (!c[i]) continue;
    den[i] += 1;
    den[i + 1] -= 2;
  }
  return {num, den};
}

/// Coefficients of z^1 .. z^m in the power series of G(z), by exact long
/// division over the rationals.
inline std::vector<BigInt> generating_function_coefficients(const BinaryWord& w,
                                                            std::size_t m) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "need at least one term");
  const auto [num, den] = generating_function_polynomials(w);
  std::vector<Rational> series(m + 1, 0);
  for (std::size_t j = 0; j <= m; ++j) {
    Rational acc = j < num.size() ? num[j] : Rational(0);
    for (std::size_t l = 1; l <= j && l < den.size(); ++l)
      acc -= den[l] * series[j - l];
    series[j] = acc / den[0];
  }
  std::vector<BigInt> out;
  out.reserve(m);
  for (std::size_t j = 1; j <= m; ++j) {
    if (series[j].get_den() != 1)
      throw Error(ErrorKind::internal, "non-integral series coefficient");
    out.push_back(series[j].get_num());
  }
  return out;
}

/// G(z) evaluated exactly; G(1/2) is the probability the word ever occurs.
inline Rational generating_function_at(const BinaryWord& w, const Rational& z) {
  const auto [num, den] = generating_function_polynomials(w);
  auto eval = [&](const std::vector<Rational>& p) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
  };
  const Rational d = eval(den);
  if (sgn(d) == 0) throw Error(ErrorKind::invalid_argument, "pole of G");
  return eval(num) / d;
}

/// 2 * C_w.
inline std::uint64_t expected_wait_time(const BinaryWord& w) {
  return 2 * conway_leading_number(autocorrelation(w)).value;
}

/// a_i = sum over terms of coefficient * a_{i - lag}.
struct RecurrenceSpec {
  std::vector<std::pair<std::size_t, long>> terms;  // (lag, coefficient)
  std::string oeis;
  std::string name;

  std::size_t order() const {
    std::size_t m = 0;
    for (auto& [lag, c] : terms) m = std::max(m, lag);
    return m;
  }

  std::string formula() const {
    std::string s = "a(i) =";
    bool first = true;
    for (auto& [lag, c] : terms) {
      long mag = c < 0 ? -c : c;
      if (first)
        s += c < 0 ? " -" : " ";
      else
        s += c < 0 ? " - " : " + ";
      if (mag != 1) s += std::to_string(mag);
      s += "a(i-" + std::to_string(lag) + ")";
      first = false;
    }
    return s;
  }
};

/// True iff every index i with i > order satisfies the recurrence.
inline bool verify_recurrence(const FirstTimerSequence& seq,
                              const RecurrenceSpec& spec) {
  const std::size_t order = spec.order();
  if (order < 1) throw Error(ErrorKind::invalid_argument, "empty recurrence");
  if (seq.size() <= order)
    throw Error(ErrorKind::invalid_argument, "sequence too short to test");
  for (std::size_t i = order + 1; i <= seq.size(); ++i) {
    BigInt rhs = 0;
    for (auto& [lag, c] : spec.terms) rhs += BigInt(c) * seq.term(i - lag);
    if (rhs != seq.term(i)) return false;
  }
  return true;
}

/// a_i = a_{i-1} + ... + a_{i-order}.
inline RecurrenceSpec nacci_recurrence(std::size_t order) {
  RecurrenceSpec r;
  for (std::size_t lag = 1; lag <= order; ++lag) r.terms.push_back({lag, 1});
  return r;
}

/// Known OEIS entries for first-timer sequences, keyed by autocorrelation
/// label. Covers words of length up to 4 only.
inline const std::map<std::string, RecurrenceSpec>& known_sequences() {
  static const std::map<std::string, RecurrenceSpec> table = {
      {"1", {{{1, 1}}, "A000012", "Only 1s"}},
      {"11", {{{1, 1}, {2, 1}}, "A000045", "Fibonacci numbers"}},
      {"10", {{{1, 2}, {2, -1}}, "A001477", "Whole numbers"}},
      {"111", {{{1, 1}, {2, 1}, {3, 1}}, "A000073", "Tribonacci numbers"}},
      {"100", {{{1, 2}, {3, -1}}, "A000071", "Fibonacci numbers - 1"}},
      {"101", {{{1, 1}, {2, 1}, {4, 1}}, "A005314", "(no short description)"}},
      {"1111",
       {{{1, 1}, {2, 1}, {3, 1}, {4, 1}}, "A000078", "Tetranacci numbers"}},
      {"1000",
       {{{1, 2}, {4, -1}}, "A008937", "Partial sums of Tribonacci numbers"}},
  };
  return table;
}

inline std::optional<RecurrenceSpec> known_sequence(const BinaryWord& w) {
  if (w.size() > 4) return std::nullopt;
  const auto& table = known_sequences();
  auto it = table.find(autocorrelation(w).label());
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace penney
