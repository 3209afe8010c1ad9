#pragma once

// Test-only oracles that share no code path with the library's automata.

#include <cstdint>
#include <string>

#include "penney/rational.hpp"

#include "penney/word.hpp"

namespace penney::oracle {

/// Number of length-i strings whose only occurrence of w is their suffix,
/// by enumerating all 2^i strings.
inline std::uint64_t first_timers_by_enumeration(const BinaryWord& w, std::size_t i) {
  const std::string& pat = w.str();
  const std::size_t n = pat.size();
  if (i < n) return 0;
  std::uint64_t count = 0;
  std::string s(i, 'H');
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << i); ++v) {
    for (std::size_t j = 0; j < i; ++j) s[j] = (v >> j) & 1 ? 'T' : 'H';
    if (s.compare(i - n, n, pat) != 0) continue;
    if (s.find(pat) == i - n) ++count;
  }
  return count;
}

struct ResolvedMass {
  Rational alice = 0, bob = 0;  // mass decided within the horizon
};

/// Plays every flip sequence of length `horizon` through naive substring
/// search. With `bob_skips_first`, the first flip is invisible to Bob.
inline ResolvedMass race_by_enumeration(const BinaryWord& a, const BinaryWord& b,
                                        std::size_t horizon, bool bob_skips_first) {
  const std::string& pa = a.str();
  const std::string& pb = b.str();
  const std::size_t n = pa.size();
  ResolvedMass m;
  std::uint64_t alice = 0, bob = 0;
  std::string s(horizon, 'H');
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << horizon); ++v) {
    for (std::size_t j = 0; j < horizon; ++j) s[j] = (v >> j) & 1 ? 'T' : 'H';
    for (std::size_t end = n; end <= horizon; ++end) {
      const bool ha = s.compare(end - n, n, pa) == 0;
      const bool hb = s.compare(end - n, n, pb) == 0 && (!bob_skips_first || end - n >= 1);
      if (ha) { ++alice; break; }
      if (hb) { ++bob; break; }
    }
  }
  m.alice = Rational(alice) / Rational(pow2(static_cast<unsigned>(horizon)));
  m.bob = Rational(bob) / Rational(pow2(static_cast<unsigned>(horizon)));
  return m;
}

}  // namespace penney::oracle
