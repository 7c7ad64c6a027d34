#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hsp/exact.hpp"
#include "hsp/partition.hpp"

namespace hsp {

/// Size limits. Every enumeration in the library checks against these.
struct Limits {
  std::uint64_t max_elements = 1'000'000;
  std::uint64_t max_index = 100'000;
  int max_degree = 40;
  unsigned threads = 1;
};

/// Census of a subgroup H <= S_n by cycle type: counts[t] = |H ∩ C_t|.
/// This is all the analytic core needs to know about H.
struct ClassProfile {
  int degree = 0;
  CanonicalMap<CycleType, BigInt> counts;

  static ClassProfile trivial(int n) {
    ClassProfile p;
    p.degree = n;
    p.counts[CycleType::identity(n)] = 1;
    return p;
  }

  BigInt order() const {
    BigInt total = 0;
    for (const auto& [t, c] : counts) total += c;
    return total;
  }

  bool is_trivial() const { return order() == 1; }

  BigInt count(const CycleType& t) const {
    auto it = counts.find(t);
    return it == counts.end() ? BigInt(0) : it->second;
  }

  /// Minimal support over non-identity types present, if any.
  std::optional<int> minimal_degree() const {
    std::optional<int> best;
    for (const auto& [t, c] : counts) {
      if (c == 0 || t.is_identity()) continue;
      int s = t.support();
      if (!best || s < *best) best = s;
    }
    return best;
  }

  /// Throws PreconditionError describing the first broken invariant.
  void validate() const {
    if (count(CycleType::identity(degree)) != 1) throw PreconditionError("class profile must contain the identity exactly once");
    for (const auto& [t, c] : counts) {
      if (t.size() != degree) throw PreconditionError("cycle type " + t.to_string() + " is not a partition of " + std::to_string(degree));
      if (c < 0) throw PreconditionError("negative count in class profile");
      if (c > sn_class_size(t)) throw PreconditionError("count for " + t.to_string() + " exceeds the S_n class size");
    }
  }

  friend bool operator==(const ClassProfile& a, const ClassProfile& b) {
    if (a.degree != b.degree) return false;
    auto strip = [](const ClassProfile& p) {
      CanonicalMap<CycleType, BigInt> m;
      for (const auto& [t, c] : p.counts) {
        if (c != 0) m[t] = c;
      }
      return m;
    };
    return strip(a) == strip(b);
  }
};

}  // namespace hsp
