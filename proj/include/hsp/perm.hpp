#pragma once

// Permutations of {1..n}. Points are stored 0-based; all text uses 1-based
// cycle notation. Composition is left to right: (p * q)(x) = q(p(x)).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hsp/exact.hpp"
#include "hsp/partition.hpp"

namespace hsp::perm {

using Point = std::uint32_t;

class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 0) : images_(degree) {
    for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
  }

  /// From 0-based images; throws if not a bijection.
  static Permutation from_images(std::vector<Point> images) {
    std::vector<char> seen(images.size(), 0);
    for (Point p : images) {
      if (p >= images.size() || seen[p]) throw std::invalid_argument("images do not form a bijection");
      seen[p] = 1;
    }
    Permutation out;
    out.images_ = std::move(images);
    return out;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  Permutation& operator*=(const Permutation& rhs) { return *this = *this * rhs; }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
    return out;
  }

  /// g^{-1} * this * g
  Permutation conjugated_by(const Permutation& g) const { return g.inverse() * *this * g; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  std::size_t fix() const {
    std::size_t f = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) f += images_[i] == i;
    return f;
  }

  std::size_t support() const { return degree() - fix(); }

  /// Smallest moved point, or degree() for the identity.
  Point first_moved() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return static_cast<Point>(i);
    }
    return static_cast<Point>(images_.size());
  }

  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<char> seen(images_.size(), 0);
    for (Point i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<Point> c;
      for (Point j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  CycleType cycle_type() const {
    std::vector<int> parts;
    std::vector<char> seen(images_.size(), 0);
    for (Point i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (Point j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      parts.push_back(len);
    }
    return CycleType(std::move(parts));
  }

  bool is_even() const { return cycle_type().sign() == 1; }

  /// 1-based disjoint cycle notation; "()" for the identity.
  std::string to_string() const {
    std::ostringstream os;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
      os << ')';
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Parses whitespace-separated disjoint cycles such as "(1 2)(3 4)";
/// points absent from the text are fixed. Commas are accepted as separators.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  using K = ParseError::Kind;
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(K::Malformed, "expected '(' in cycle notation: \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError(K::Malformed, "unterminated cycle: \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError(K::Malformed, std::string("unexpected character '") + text[i] + "' in cycle notation");
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > (1ULL << 32)) throw ParseError(K::OutOfRange, "point out of range");
        ++i;
      }
      if (v < 1 || v > degree) {
        throw ParseError(K::OutOfRange, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      }
      Point p = static_cast<Point>(v - 1);
      if (used[p]) throw ParseError(K::RepeatedPoint, "point " + std::to_string(v) + " appears more than once");
      used[p] = 1;
      cycle.push_back(p);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace hsp::perm
