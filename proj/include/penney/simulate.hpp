#pragma once

// Seeded Monte Carlo play of the randomized games, straight from their rules.
// Pattern matching here uses sliding bit windows, not the prefix automata,
// so the estimates are an independent check on the exact engine.

#include <array>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "penney/chain.hpp"
#include "penney/error.hpp"
#include "penney/rational.hpp"
#include "penney/variants.hpp"
#include "penney/word.hpp"

namespace penney {

/// SplitMix64 (Steele, Lea & Flood, 2014): a Weyl counter passed through a
/// 64-bit finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Fair coin drawing 64 flips per generator call.
class CoinStream {
 public:
  explicit CoinStream(std::uint64_t seed) noexcept : rng_(seed) {}

  /// 1 = T, 0 = H.
  unsigned flip() noexcept {
    if (left_ == 0) { buffer_ = rng_.next(); left_ = 64; }
    const unsigned bit = static_cast<unsigned>(buffer_ & 1u);
    buffer_ >>= 1;
    --left_;
    return bit;
  }

 private:
  SplitMix64 rng_;
  std::uint64_t buffer_ = 0;
  unsigned left_ = 0;
};

/// Sliding window over the last n flips of a stream, compared against a
/// word's bit pattern.
class Watcher {
 public:
  explicit Watcher(const BinaryWord& w)
      : pattern_(w.bits()), mask_((std::uint64_t{1} << w.size()) - 1), n_(w.size()) {}

  /// Pushes a flip; true if the word now occupies the window.
  bool push(unsigned bit) noexcept {
    window_ = ((window_ << 1) | bit) & mask_;
    if (seen_ < n_) ++seen_;
    return seen_ == n_ && window_ == pattern_;
  }

  /// Would `bit` complete the word?
  bool completes_with(unsigned bit) const noexcept {
    if (seen_ + 1 < n_) return false;
    return (((window_ << 1) | bit) & mask_) == pattern_;
  }

  /// Longest L < n with the last L flips equal to the word's first L.
  std::size_t progress() const noexcept {
    for (std::size_t len = std::min(seen_, n_ - 1); len > 0; --len) {
      const std::uint64_t tail = window_ & ((std::uint64_t{1} << len) - 1);
      if (tail == (pattern_ >> (n_ - len))) return len;
    }
    return 0;
  }

 private:
  std::uint64_t pattern_, mask_, window_ = 0;
  std::size_t n_, seen_ = 0;
};

inline constexpr std::uint64_t max_flips_per_trial = 1'000'000;

struct TrialCounts {
  std::uint64_t alice = 0, bob = 0, tie = 0, aborted = 0;

  std::uint64_t total() const { return alice + bob + tie + aborted; }
  TrialCounts& operator+=(const TrialCounts& o) {
    alice += o.alice; bob += o.bob; tie += o.tie; aborted += o.aborted;
    return *this;
  }
};

namespace detail {

inline Outcome play_once(const GameVariant& v, const BinaryWord& a,
                         const BinaryWord& b, CoinStream& coin, bool& aborted) {
  aborted = false;
  Watcher wa(a), wb(b);
  const unsigned k = v.tag == VariantTag::kth_occurrence ? v.k : 1;
  unsigned ca = 0, cb = 0;

  switch (v.tag) {
    case VariantTag::classic:
    case VariantTag::kth_occurrence:
    case VariantTag::post_a_bobalyptic:
    case VariantTag::head_start: {
      bool first = v.tag == VariantTag::head_start;
      for (std::uint64_t i = 0; i < max_flips_per_trial; ++i) {
        const unsigned bit = coin.flip();
        if (wa.push(bit)) ++ca;
        if (!first && wb.push(bit)) ++cb;
        first = false;
        if (ca == k && cb == k)
          throw Error(ErrorKind::internal, "simultaneous completion in simulation");
        if (ca == k) return Outcome::alice_win;
        if (cb == k) {
          if (v.tag == VariantTag::post_a_bobalyptic && wa.completes_with(coin.flip()))
            return Outcome::tie;
          return Outcome::bob_win;
        }
      }
      break;
    }
    case VariantTag::two_coin: {
      for (std::uint64_t i = 0; i < max_flips_per_trial; ++i) {
        const bool da = wa.push(coin.flip());
        const bool db = wb.push(coin.flip());
        if (da && db) return Outcome::tie;
        if (da) return Outcome::alice_win;
        if (db) return Outcome::bob_win;
      }
      break;
    }
    case VariantTag::blended: {
      for (std::uint64_t i = 0; i < max_flips_per_trial; ++i) {
        const unsigned want_a = a[wa.progress()] == 'T';
        const unsigned want_b = b[wb.progress()] == 'T';
        const unsigned bit = want_a == want_b ? want_a : coin.flip();
        const bool da = wa.push(bit);
        const bool db = wb.push(bit);
        if (da && db) throw Error(ErrorKind::internal, "simultaneous completion");
        if (da) return Outcome::alice_win;
        if (db) return Outcome::bob_win;
      }
      break;
    }
    case VariantTag::no_flippancy:
      throw Error(ErrorKind::invalid_argument, "no_flippancy is deterministic");
  }
  aborted = true;
  return Outcome::tie;
}

}  // namespace detail

struct SimulationReport {
  GameVariant variant;
  BinaryWord alice;
  BinaryWord bob;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  TrialCounts counts;
  OutcomeDistribution exact;  // reference computed from the rules

  double frequency(std::uint64_t count) const {
    return static_cast<double>(count) / static_cast<double>(trials);
  }

  /// (empirical - exact) / sqrt(exact (1 - exact) / trials); empty when the
  /// exact value is 0 or 1.
  std::optional<double> z_score(std::uint64_t count, const Rational& p) const {
    if (sgn(p) <= 0 || p >= 1) return std::nullopt;
    const double e = to_double(p);
    return (frequency(count) - e) / std::sqrt(e * (1 - e) / static_cast<double>(trials));
  }

  std::array<std::optional<double>, 3> z_scores() const {
    return {z_score(counts.alice, exact.alice_win), z_score(counts.bob, exact.bob_win),
            z_score(counts.tie, exact.tie)};
  }

  /// All |z| within `limit`, certain outcomes matched exactly, nothing
  /// aborted.
  bool consistent(double limit) const {
    if (counts.aborted != 0) return false;
    const std::array<std::pair<std::uint64_t, const Rational*>, 3> cols{
        {{counts.alice, &exact.alice_win}, {counts.bob, &exact.bob_win},
         {counts.tie, &exact.tie}}};
    for (auto& [count, p] : cols) {
      if (sgn(*p) == 0 && count != 0) return false;
      if (*p == 1 && count != trials) return false;
      if (auto z = z_score(count, *p); z && std::fabs(*z) > limit) return false;
    }
    return true;
  }
};

/// Exact reference for a simulated game. Head-start uses the rule-level
/// chain, since the simulation plays the rules.
inline OutcomeDistribution simulation_reference(const GameVariant& v,
                                                const BinaryWord& a, const BinaryWord& b) {
  if (v.tag == VariantTag::head_start) return head_start_chain_probabilities(a, b);
  return evaluate(v, a, b);
}

/// Plays `trials` games. Worker w handles a contiguous share of the trials
/// with its own generator seeded seed + w; the report depends only on
/// (variant, words, trials, seed, workers).
inline SimulationReport simulate(const GameVariant& variant, const BinaryWord& alice,
                                 const BinaryWord& bob, std::uint64_t trials,
                                 std::uint64_t seed, unsigned workers = 1) {
  if (!variant.randomized())
    throw Error(ErrorKind::invalid_argument,
                "no_flippancy is deterministic; use no_flippancy_play (CLI: play)");
  if (variant.allows_equal_words())
    require_same_length(alice, bob);
  else
    require_distinct_pair(alice, bob);
  if (trials < 1) throw Error(ErrorKind::invalid_argument, "trials must be >= 1");
  if (workers < 1) workers = 1;
  if (alice.size() > 62)
    throw Error(ErrorKind::oversize, "word too long for simulation");

  std::vector<TrialCounts> partial(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = trials * w / workers;
    const std::uint64_t end = trials * (w + 1) / workers;
    CoinStream coin(seed + w);
    TrialCounts& c = partial[w];
    for (std::uint64_t t = begin; t < end; ++t) {
      bool aborted = false;
      const Outcome o = detail::play_once(variant, alice, bob, coin, aborted);
      if (aborted) ++c.aborted;
      else if (o == Outcome::alice_win) ++c.alice;
      else if (o == Outcome::bob_win) ++c.bob;
      else ++c.tie;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          run(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  SimulationReport r{variant, alice, bob, trials, seed, workers, {}, {}};
  for (auto& c : partial) r.counts += c;
  r.exact = simulation_reference(variant, alice, bob);
  return r;
}

}  // namespace penney
