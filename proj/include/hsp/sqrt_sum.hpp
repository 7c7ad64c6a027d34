#pragma once

// Exact sums  sum_i a_i / sqrt(c_i)  with a_i >= 0 rational and c_i >= 1
// integer, compared against rationals by squaring (one term) or by
// rigorous rational enclosures refined until the comparison is decided.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsp/exact.hpp"

namespace hsp {

class SqrtSum {
 public:
  struct Term {
    Rational coefficient;
    BigInt radicand;
  };

  /// Bits of precision for the first enclosure.
  static constexpr unsigned guard_bits = 64;

  void add(const Rational& coefficient, const BigInt& radicand) {
    if (coefficient < 0) throw std::invalid_argument("SqrtSum coefficients must be non-negative");
    if (radicand < 1) throw std::invalid_argument("SqrtSum radicands must be positive");
    if (coefficient == 0) return;
    terms_.push_back({coefficient, radicand});
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Exact value when every radicand is a perfect square.
  std::optional<Rational> rational_value() const {
    Rational total = 0;
    for (const auto& t : terms_) {
      BigInt r = isqrt(t.radicand);
      if (r * r != t.radicand) return std::nullopt;
      total += t.coefficient / Rational(r);
    }
    return total;
  }

  /// Exact square of the value when it has at most one term.
  std::optional<Rational> square() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() > 1) return std::nullopt;
    return terms_[0].coefficient * terms_[0].coefficient / Rational(terms_[0].radicand);
  }

  /// Rational lower and upper bounds at `bits` bits of precision per term.
  std::pair<Rational, Rational> enclose(unsigned bits) const {
    Rational lo = 0;
    Rational hi = 0;
    const BigInt scale = BigInt(1) << bits;
    for (const auto& t : terms_) {
      BigInt s = isqrt(t.radicand * scale * scale);  // floor(2^bits * sqrt(c))
      if (s * s == t.radicand * scale * scale) {
        Rational v = t.coefficient * Rational(scale) / Rational(s);
        lo += v;
        hi += v;
      } else {
        lo += t.coefficient * Rational(scale) / Rational(s + 1);
        hi += t.coefficient * Rational(scale) / Rational(s);
      }
    }
    return {lo, hi};
  }

  /// Exact three-way comparison of this sum with a rational.
  std::strong_ordering compare(const Rational& x) const {
    if (auto exact = rational_value()) return three_way(*exact, x);
    if (terms_.size() == 1) {
      // sign(a/sqrt(c) - x): both sides non-negative when x >= 0.
      if (x < 0) return std::strong_ordering::greater;
      return three_way(*square(), Rational(x * x));
    }
    // At least one radicand is not a perfect square and every coefficient is
    // positive, so the sum is irrational and refinement terminates.
    for (unsigned bits = guard_bits;; bits *= 2) {
      auto [lo, hi] = enclose(bits);
      if (x < lo) return std::strong_ordering::greater;
      if (x > hi) return std::strong_ordering::less;
    }
  }

  /// Decimal rendering with `digits` fractional digits (last digit may be
  /// off by one when the value sits on a rounding boundary).
  std::string to_decimal(unsigned digits) const {
    if (auto exact = rational_value()) return to_decimal_string(*exact, digits);
    unsigned bits = 4 * digits + guard_bits;
    auto [lo, hi] = enclose(bits);
    return to_decimal_string((lo + hi) / 2, digits);
  }

  double to_double() const {
    auto [lo, hi] = enclose(guard_bits);
    return hsp::to_double((lo + hi) / 2);
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace hsp
