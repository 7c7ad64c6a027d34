#pragma once

// Exact representation theory of S_n: irrep dimensions by the hook length
// formula and character values by the Murnaghan-Nakayama rule.
//
// Shapes are encoded as beta-sets (first-column hook lengths) in a 128-bit
// mask. Removing a rim hook of length k moves one bead from position b to
// b-k; the sign is the parity of the beads jumped over. Masks are
// normalized by stripping trailing beads (zero-length rows), so a shape
// has exactly one encoding regardless of its number of rows.

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hsp/exact.hpp"
#include "hsp/partition.hpp"

namespace hsp::characters {

using Mask = unsigned __int128;

/// Largest n for which a shape fits the mask encoding.
inline constexpr int max_degree = 127;
/// Up to this degree character arithmetic runs in __int128
/// (|chi| <= sqrt(n!) and every partial sum has at most n terms).
inline constexpr int int128_degree = 50;

namespace detail {

inline int popcount(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
}

inline int trailing_ones(Mask m) {
  auto lo = static_cast<std::uint64_t>(m);
  int t = std::countr_one(lo);
  if (t < 64) return t;
  return 64 + std::countr_one(static_cast<std::uint64_t>(m >> 64));
}

inline Mask bit(int i) { return Mask{1} << i; }

inline int lowest_bit(Mask m) {
  auto lo = static_cast<std::uint64_t>(m);
  return lo != 0 ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

inline Mask normalize(Mask m) {
  int t = trailing_ones(m);
  return t >= 128 ? Mask{0} : m >> t;
}

inline Mask encode(const std::vector<int>& parts) {
  const int rows = static_cast<int>(parts.size());
  Mask m = 0;
  for (int i = 0; i < rows; ++i) m |= bit(parts[static_cast<std::size_t>(i)] + (rows - 1 - i));
  return m;
}

struct KeyHash {
  std::size_t operator()(const std::pair<Mask, std::uint32_t>& k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k.first);
    auto hi = static_cast<std::uint64_t>(k.first >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
    h ^= static_cast<std::uint64_t>(k.second) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

template <class T>
BigInt to_big(const T& v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return v;
  } else {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-out) : out;
  }
}

}  // namespace detail

/// Memo table for Murnaghan-Nakayama, keyed by (remaining shape, remaining
/// multiset of cycle lengths). Cycles are consumed largest first. Not
/// thread-safe: confine one cache per thread.
template <class T>
class BasicCharacterCache {
 public:
  T character(const Partition& shape, const CycleType& type) {
    if (shape.size() != type.size()) {
      throw std::invalid_argument("shape " + shape.to_string() + " and cycle type " + type.to_string() + " have different sizes");
    }
    if (shape.size() > max_degree) throw LimitError("character degree above " + std::to_string(max_degree));
    const auto ids = suffix_ids(type);
    return eval(detail::encode(shape.parts()), type.parts(), ids, 0);
  }

  /// chi_lambda(type) for every lambda in `shapes`, sharing one memo.
  std::vector<T> column(std::span<const Partition> shapes, const CycleType& type) {
    std::vector<T> out;
    out.reserve(shapes.size());
    for (const auto& s : shapes) out.push_back(character(s, type));
    return out;
  }

  std::size_t size() const noexcept { return memo_.size(); }

 private:
  std::vector<std::uint32_t> suffix_ids(const CycleType& type) {
    const auto& parts = type.parts();
    std::vector<std::uint32_t> ids(parts.size() + 1);
    for (std::size_t j = 0; j <= parts.size(); ++j) {
      std::vector<int> suffix(parts.begin() + static_cast<std::ptrdiff_t>(j), parts.end());
      auto [it, inserted] = suffixes_.try_emplace(std::move(suffix), static_cast<std::uint32_t>(suffixes_.size()));
      ids[j] = it->second;
    }
    return ids;
  }

  T eval(Mask shape, const std::vector<int>& cycles, const std::vector<std::uint32_t>& ids, std::size_t j) {
    if (j == cycles.size()) return shape == 0 ? T(1) : T(0);
    auto key = std::make_pair(shape, ids[j]);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int k = cycles[j];
    T total = 0;
    for (Mask rest = shape; rest != 0; rest &= rest - 1) {
      const int b = detail::lowest_bit(rest);
      if (b < k || (shape & detail::bit(b - k))) continue;
      Mask between = shape & (detail::bit(b) - 1) & ~(detail::bit(b - k + 1) - 1);
      Mask next = detail::normalize(shape ^ detail::bit(b) ^ detail::bit(b - k));
      T sub = eval(next, cycles, ids, j + 1);
      if (detail::popcount(between) % 2) {
        total -= sub;
      } else {
        total += sub;
      }
    }
    memo_.emplace(key, total);
    return total;
  }

  std::unordered_map<std::pair<Mask, std::uint32_t>, T, detail::KeyHash> memo_;
  std::map<std::vector<int>, std::uint32_t> suffixes_;
};

/// Degree-dispatching cache: __int128 arithmetic when it provably cannot
/// overflow, arbitrary precision otherwise.
class CharacterCache {
 public:
  BigInt character(const Partition& shape, const CycleType& type) {
    if (shape.size() <= int128_degree) return detail::to_big(small_.character(shape, type));
    return large_.character(shape, type);
  }

  std::vector<BigInt> column(std::span<const Partition> shapes, const CycleType& type) {
    std::vector<BigInt> out;
    out.reserve(shapes.size());
    for (const auto& s : shapes) out.push_back(character(s, type));
    return out;
  }

 private:
  BasicCharacterCache<__int128> small_;
  BasicCharacterCache<BigInt> large_;
};

/// chi_lambda(mu) with a throwaway cache.
inline BigInt mn_character(const Partition& shape, const CycleType& type) {
  CharacterCache cache;
  return cache.character(shape, type);
}

/// Hook lengths of every cell, row by row.
inline std::vector<int> hook_lengths(const Partition& shape) {
  std::vector<int> hooks;
  const auto conj = shape.conjugate();
  for (std::size_t i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      int arm = shape[i] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

/// d_lambda = n! / prod(hooks).
inline BigInt dimension(const Partition& shape) {
  BigInt prod = 1;
  for (int h : hook_lengths(shape)) prod *= h;
  return factorial(static_cast<unsigned>(shape.size())) / prod;
}

struct OrthogonalityReport {
  int degree = 0;
  std::size_t classes = 0;
  bool rows_ok = true;
  bool columns_ok = true;
  bool sum_of_squares_ok = true;
  std::string counterexample;

  bool passed() const { return rows_ok && columns_ok && sum_of_squares_ok; }
};

/// Full row and column orthogonality of the S_n character table.
inline OrthogonalityReport orthogonality_check(int n) {
  if (n < 1) throw std::invalid_argument("orthogonality check needs n >= 1");
  OrthogonalityReport rep;
  rep.degree = n;
  const auto shapes = partitions<Partition>(n);
  const auto types = partitions<CycleType>(n);
  rep.classes = shapes.size();
  const BigInt order = factorial(static_cast<unsigned>(n));

  CharacterCache cache;
  std::vector<std::vector<BigInt>> table(shapes.size());  // table[lambda][mu]
  for (std::size_t a = 0; a < shapes.size(); ++a) {
    for (const auto& t : types) table[a].push_back(cache.character(shapes[a], t));
  }
  std::vector<BigInt> class_sizes;
  for (const auto& t : types) class_sizes.push_back(sn_class_size(t));

  for (std::size_t a = 0; a < shapes.size() && rep.rows_ok; ++a) {
    for (std::size_t b = a; b < shapes.size(); ++b) {
      BigInt s = 0;
      for (std::size_t m = 0; m < types.size(); ++m) s += class_sizes[m] * table[a][m] * table[b][m];
      if (s != (a == b ? order : BigInt(0))) {
        rep.rows_ok = false;
        rep.counterexample = "row " + shapes[a].to_string() + " x " + shapes[b].to_string() + " = " + s.str();
        break;
      }
    }
  }
  for (std::size_t m = 0; m < types.size() && rep.columns_ok; ++m) {
    for (std::size_t m2 = m; m2 < types.size(); ++m2) {
      BigInt s = 0;
      for (std::size_t a = 0; a < shapes.size(); ++a) s += table[a][m] * table[a][m2];
      BigInt expected = m == m2 ? BigInt(order / class_sizes[m]) : BigInt(0);
      if (s != expected) {
        rep.columns_ok = false;
        if (rep.counterexample.empty()) {
          rep.counterexample = "column " + types[m].to_string() + " x " + types[m2].to_string() + " = " + s.str();
        }
        break;
      }
    }
  }
  BigInt squares = 0;
  for (const auto& s : shapes) squares += dimension(s) * dimension(s);
  rep.sum_of_squares_ok = squares == order;
  if (!rep.sum_of_squares_ok && rep.counterexample.empty()) rep.counterexample = "sum of squared dimensions = " + squares.str();
  return rep;
}

}  // namespace hsp::characters
