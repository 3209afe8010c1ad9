#pragma once

// Binary words over {H, T} and their overlap structure: correlation and
// autocorrelation vectors, Conway leading numbers, correlation polynomials.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "penney/error.hpp"
#include "penney/rational.hpp"

namespace penney {

inline constexpr char flip(char c) noexcept { return c == 'H' ? 'T' : 'H'; }

/// An immutable nonempty string over {H, T}.
class BinaryWord {
 public:
  static constexpr std::size_t max_length = 30;

  /// Case-insensitive; rejects anything outside {H, T, h, t}.
  static BinaryWord parse(std::string_view text) {
    if (text.empty())
      throw Error(ErrorKind::malformed_word, "empty word");
    if (text.size() > max_length)
      throw Error(ErrorKind::malformed_word,
                  "word longer than " + std::to_string(max_length) + ": '" +
                      std::string(text) + "'");
    std::string chars;
    chars.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case 'H': case 'h': chars.push_back('H'); break;
        case 'T': case 't': chars.push_back('T'); break;
        default:
          throw Error(ErrorKind::malformed_word,
                      "word must contain only H and T: '" + std::string(text) +
                          "'");
      }
    }
    return BinaryWord(Checked{}, std::move(chars));
  }

  explicit BinaryWord(std::string_view text) : BinaryWord(parse(text)) {}

  std::size_t size() const noexcept { return chars_.size(); }
  char operator[](std::size_t i) const { return chars_[i]; }
  const std::string& str() const noexcept { return chars_; }

  std::string_view prefix(std::size_t len) const {
    return std::string_view(chars_).substr(0, len);
  }
  std::string_view suffix(std::size_t len) const {
    return std::string_view(chars_).substr(chars_.size() - len);
  }

  /// Word as an n-bit integer, H = 0, T = 1, first character most
  /// significant.
  std::uint32_t bits() const noexcept {
    std::uint32_t v = 0;
    for (char c : chars_) v = (v << 1) | (c == 'T' ? 1u : 0u);
    return v;
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  struct Checked {};
  BinaryWord(Checked, std::string chars) : chars_(std::move(chars)) {}

  std::string chars_;
};

inline std::string to_string(const BinaryWord& w) { return w.str(); }

/// All 2^n words of length n in lexicographic order (H < T).
inline std::vector<BinaryWord> all_words(std::size_t n) {
  if (n == 0 || n > BinaryWord::max_length)
    throw Error(ErrorKind::oversize, "word length out of range");
  std::vector<BinaryWord> out;
  out.reserve(std::size_t{1} << n);
  std::string buf(n, 'H');
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    for (std::size_t i = 0; i < n; ++i)
      buf[i] = (v >> (n - 1 - i)) & 1 ? 'T' : 'H';
    out.push_back(BinaryWord::parse(buf));
  }
  return out;
}

inline void require_same_length(const BinaryWord& a, const BinaryWord& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::length_mismatch,
                "words differ in length: " + a.str() + " (" +
                    std::to_string(a.size()) + ") vs " + b.str() + " (" +
                    std::to_string(b.size()) + ")");
}

/// Bits (c_0, ..., c_{n-1}).
class CorrelationVector {
 public:
  explicit CorrelationVector(std::vector<std::uint8_t> bits)
      : bits_(std::move(bits)) {}

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// "100", "1011" ...
  std::string label() const {
    std::string s;
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  friend bool operator==(const CorrelationVector&,
                         const CorrelationVector&) = default;
  friend auto operator<=>(const CorrelationVector&,
                          const CorrelationVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct ConwayLeadingNumber {
  std::uint64_t value = 0;

  friend auto operator<=>(const ConwayLeadingNumber&,
                          const ConwayLeadingNumber&) = default;
};

/// c_i = 1 iff the length-(n-i) prefix of `second` equals the length-(n-i)
/// suffix of `first`.
inline CorrelationVector correlation(const BinaryWord& first,
                                     const BinaryWord& second) {
  require_same_length(first, second);
  const std::size_t n = first.size();
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i)
    bits[i] = second.prefix(n - i) == first.suffix(n - i) ? 1 : 0;
  return CorrelationVector(std::move(bits));
}

inline CorrelationVector autocorrelation(const BinaryWord& w) {
  return correlation(w, w);
}

/// c_0 is the most significant bit.
inline ConwayLeadingNumber conway_leading_number(const CorrelationVector& v) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < v.size(); ++i) value = (value << 1) | (v[i] ? 1 : 0);
  return {value};
}

inline ConwayLeadingNumber conway_leading_number(const BinaryWord& a,
                                                 const BinaryWord& b) {
  return conway_leading_number(correlation(a, b));
}

/// c(z) = sum c_i z^i, by Horner.
inline Rational correlation_polynomial_eval(const CorrelationVector& v,
                                            const Rational& z) {
  Rational acc = 0;
  for (std::size_t i = v.size(); i-- > 0;) acc = acc * z + (v[i] ? 1 : 0);
  return acc;
}

inline BinaryWord complement(const BinaryWord& w) {
  std::string s = w.str();
  for (char& c : s) c = flip(c);
  return BinaryWord::parse(s);
}

inline BinaryWord reverse(const BinaryWord& w) {
  return BinaryWord::parse(std::string(w.str().rbegin(), w.str().rend()));
}

inline bool is_self_overlapping(const BinaryWord& w) {
  auto v = autocorrelation(w);
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i]) return true;
  return false;
}

}  // namespace penney
