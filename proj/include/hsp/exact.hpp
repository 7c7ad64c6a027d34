#pragma once

// Exact integer/rational arithmetic helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle notation, group files, catalog names).
class ParseError : public Error {
 public:
  enum class Kind { Malformed, OutOfRange, RepeatedPoint, MixedDegree };
  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A configured size limit (degree, order, index) would be exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (trivial subgroup, H not <= G, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

inline const BigInt& factorial(unsigned n) {
  static std::mutex mu;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) table.push_back(table.back() * static_cast<unsigned>(table.size()));
  return table[n];
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

/// Floor of the square root.
inline BigInt isqrt(const BigInt& v) {
  if (v < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(v);
}

inline bool is_perfect_square(const BigInt& v) {
  if (v < 0) return false;
  BigInt r = isqrt(v);
  return r * r == v;
}

/// log2 of a positive integer, accurate to double precision.
inline double log2_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log2 of non-positive value");
  std::size_t msb = boost::multiprecision::msb(v);
  if (msb < 62) return std::log2(static_cast<double>(static_cast<std::uint64_t>(v)));
  std::size_t shift = msb - 60;
  BigInt top = v >> shift;
  return std::log2(static_cast<double>(static_cast<std::uint64_t>(top))) + static_cast<double>(shift);
}

/// "p/q" in lowest terms with q > 0; integers render as "p/1".
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Rational parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
inline std::string to_decimal_string(const Rational& r, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = ipow(BigInt(10), digits);
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

template <class T>
std::strong_ordering three_way(const T& a, const T& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace hsp
