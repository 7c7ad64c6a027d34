#pragma once

// Integer partitions, used both as cycle types (conjugacy classes of S_n)
// and as shapes (irreducible representations of S_n).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsp/exact.hpp"

namespace hsp {

template <class Tag>
class BasicPartition {
 public:
  BasicPartition() = default;

  /// Sorts the parts non-increasingly; zero or negative parts are rejected.
  explicit BasicPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  BasicPartition(std::initializer_list<int> parts) : BasicPartition(std::vector<int>(parts)) {}

  static BasicPartition identity(int n) { return BasicPartition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const { return parts_[i]; }

  int count(int part) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), part)); }

  /// Points moved by a permutation of this cycle type.
  int support() const { return size() - count(1); }
  bool is_identity() const { return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; }); }

  /// (-1)^(n - number of parts).
  int sign() const { return (size() - static_cast<int>(length())) % 2 == 0 ? 1 : -1; }

  BasicPartition conjugate() const {
    std::vector<int> out;
    if (!parts_.empty()) {
      for (int j = 1; j <= parts_.front(); ++j) {
        out.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
      }
    }
    return BasicPartition(std::move(out));
  }

  /// Order of the centralizer of an element of this cycle type in S_n.
  BigInt centralizer_order() const {
    BigInt z = 1;
    std::map<int, unsigned> mult;
    for (int p : parts_) ++mult[p];
    for (auto [part, m] : mult) z *= ipow(BigInt(part), m) * factorial(m);
    return z;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const BasicPartition&, const BasicPartition&) = default;
  // Lexicographic; the canonical (reverse lexicographic) order is std::greater.
  friend auto operator<=>(const BasicPartition& a, const BasicPartition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

struct CycleTypeTag {};
struct ShapeTag {};

/// Cycle type of a permutation, fixed points included as parts equal to 1.
using CycleType = BasicPartition<CycleTypeTag>;
/// Young diagram shape labelling an irreducible representation of S_n.
using Partition = BasicPartition<ShapeTag>;

inline CycleType as_cycle_type(const Partition& p) { return CycleType(p.parts()); }
inline Partition as_shape(const CycleType& t) { return Partition(t.parts()); }

/// Map ordered canonically: reverse lexicographic, so (n) comes first and (1^n) last.
template <class Key, class Value>
using CanonicalMap = std::map<Key, Value, std::greater<>>;

/// Size of the S_n conjugacy class of cycle type t: n!/z_t.
inline BigInt sn_class_size(const CycleType& t) {
  return factorial(static_cast<unsigned>(t.size())) / t.centralizer_order();
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions of n in reverse lexicographic order.
template <class P = Partition>
std::vector<P> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, raw);
  std::vector<P> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

}  // namespace hsp
