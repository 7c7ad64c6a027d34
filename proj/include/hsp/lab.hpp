#pragma once

// Finite-n diagnostics for the minimal-degree conjectures and class-size
// estimates, and analytic class profiles for subgroup families too large
// to enumerate (block groups, direct products, Young subgroups).

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hsp/class_profile.hpp"
#include "hsp/exact.hpp"
#include "hsp/partition.hpp"
#include "hsp/perm_group.hpp"

namespace hsp::lab {

/// counts[k] = |H_k| = number of elements of support exactly k (k >= 2).
struct SupportCensus {
  int degree = 0;
  std::map<int, BigInt> counts;

  std::optional<int> minimal_support() const {
    for (const auto& [k, c] : counts) {
      if (c != 0) return k;
    }
    return std::nullopt;
  }

  BigInt total() const {
    BigInt t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
  }
};

inline SupportCensus support_census(const ClassProfile& prof) {
  SupportCensus s;
  s.degree = prof.degree;
  for (const auto& [t, c] : prof.counts) {
    if (c == 0 || t.is_identity()) continue;
    s.counts[t.support()] += c;
  }
  return s;
}

struct ClubEntry {
  int support = 0;
  BigInt count = 0;
  /// log2(|H_k| / n^(k * exponent))
  double log2_ratio = 0;
  /// |H_k| <= n^(k * exponent), decided in exact integer arithmetic.
  bool satisfied = true;
};

struct ClubReport {
  int degree = 0;
  Rational exponent;
  std::vector<ClubEntry> entries;
  std::optional<int> minimal_degree;
  std::optional<double> max_log2_ratio;
  std::optional<int> argmax_support;
};

/// Per-support comparison of |H_k| against n^(k*exponent). Diagnostic only:
/// the underlying statement is asymptotic and can fail at small n.
inline ClubReport club_check(const ClassProfile& prof, const Rational& exponent = Rational(1, 7)) {
  if (exponent <= 0) throw PreconditionError("exponent must be positive");
  ClubReport rep;
  rep.degree = prof.degree;
  rep.exponent = exponent;
  const auto census = support_census(prof);
  rep.minimal_degree = census.minimal_support();
  const BigInt p = boost::multiprecision::numerator(exponent);
  const auto q = static_cast<unsigned>(boost::multiprecision::denominator(exponent));
  const double log2n = prof.degree > 1 ? std::log2(static_cast<double>(prof.degree)) : 0.0;
  for (const auto& [k, c] : census.counts) {
    if (c == 0) continue;
    ClubEntry e;
    e.support = k;
    e.count = c;
    // |H_k|^q <= n^(k p)
    e.satisfied = ipow(c, q) <= ipow(BigInt(prof.degree), static_cast<unsigned>(k * p));
    e.log2_ratio = log2_big(c) - k * to_double(exponent) * log2n;
    if (!rep.max_log2_ratio || e.log2_ratio > *rep.max_log2_ratio) {
      rep.max_log2_ratio = e.log2_ratio;
      rep.argmax_support = k;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

struct SandwichReport {
  int degree = 0;
  std::size_t classes_checked = 0;
  bool passed = true;
  std::string first_violation;
  /// Type minimizing |C| / C(n,k) and type maximizing |C| / n^k.
  std::optional<CycleType> tightest_lower;
  std::optional<CycleType> tightest_upper;
};

/// C(n,k) <= |C| <= n^k for every cycle type of support k.
inline SandwichReport class_sandwich_check(int n, const Limits& limits = {}) {
  if (n < 1) throw PreconditionError("degree must be positive");
  if (n > limits.max_degree) throw LimitError("degree " + std::to_string(n) + " exceeds the bound " + std::to_string(limits.max_degree));
  SandwichReport rep;
  rep.degree = n;
  Rational best_lower_ratio = -1;
  Rational best_upper_ratio = -1;
  for (const auto& t : partitions<CycleType>(n)) {
    const auto k = static_cast<unsigned>(t.support());
    const BigInt size = sn_class_size(t);
    const BigInt lo = binomial(static_cast<unsigned>(n), k);
    const BigInt hi = ipow(BigInt(n), k);
    ++rep.classes_checked;
    if (size < lo || size > hi) {
      if (rep.passed) rep.first_violation = t.to_string() + ": " + lo.str() + " <= " + size.str() + " <= " + hi.str() + " fails";
      rep.passed = false;
    }
    if (t.is_identity()) continue;
    Rational lower_ratio(size, lo);
    Rational upper_ratio(size, hi);
    if (best_lower_ratio < 0 || lower_ratio < best_lower_ratio) {
      best_lower_ratio = lower_ratio;
      rep.tightest_lower = t;
    }
    if (upper_ratio > best_upper_ratio) {
      best_upper_ratio = upper_ratio;
      rep.tightest_upper = t;
    }
  }
  return rep;
}

struct LiebeckReport {
  int degree = 0;
  double a = 0;
  /// min over non-identity types of log2(|C| / n^(a * support))
  double min_log2_ratio = 0;
  std::optional<CycleType> witness;
  bool exceeds_one = false;
  std::string note = "empirical at fixed n; the cited class-size bound is asymptotic";
};

inline LiebeckReport liebeck_report(int n, double a, const Limits& limits = {}) {
  if (!(a < 1.0 / 3.0)) throw PreconditionError("a must be below 1/3");
  if (n < 2) throw PreconditionError("S_n needs a non-identity class (n >= 2)");
  if (n > limits.max_degree) throw LimitError("degree " + std::to_string(n) + " exceeds the bound " + std::to_string(limits.max_degree));
  LiebeckReport rep;
  rep.degree = n;
  rep.a = a;
  const double log2n = std::log2(static_cast<double>(n));
  for (const auto& t : partitions<CycleType>(n)) {
    if (t.is_identity()) continue;
    double r = log2_big(sn_class_size(t)) - a * t.support() * log2n;
    if (!rep.witness || r < rep.min_log2_ratio) {
      rep.min_log2_ratio = r;
      rep.witness = t;
    }
  }
  rep.exceeds_one = rep.min_log2_ratio > 0;
  return rep;
}

struct BabaiReport {
  int degree = 0;
  bool primitive = false;
  bool alternating_or_symmetric = false;
  /// Primitive and not A_n or S_n: the minimal degree bound is claimed.
  bool applicable = false;
  std::optional<std::size_t> minimal_degree;
  double bound = 0;  // (sqrt(n) - 1) / 2
  bool satisfied = false;
  std::optional<std::vector<std::vector<perm::Point>>> blocks;
};

inline BabaiReport babai_check(const perm::PermGroup& g, const Limits& limits = {}) {
  BabaiReport rep;
  rep.degree = static_cast<int>(g.degree());
  rep.blocks = perm::minimal_blocks(g);  // throws for intransitive input
  rep.primitive = !rep.blocks.has_value();
  const BigInt full = factorial(static_cast<unsigned>(g.degree()));
  rep.alternating_or_symmetric = g.order() == full || (g.degree() >= 3 && g.order() * 2 == full);
  rep.applicable = rep.primitive && !rep.alternating_or_symmetric;
  rep.bound = (std::sqrt(static_cast<double>(g.degree())) - 1.0) / 2.0;
  if (!g.is_trivial()) {
    rep.minimal_degree = perm::minimal_degree(g, limits);
    rep.satisfied = static_cast<double>(*rep.minimal_degree) >= rep.bound;
  }
  return rep;
}

/// Profile of S_n itself.
inline ClassProfile symmetric_profile(int n) {
  ClassProfile p;
  p.degree = n;
  for (const auto& t : partitions<CycleType>(n)) p.counts[t] = sn_class_size(t);
  return p;
}

inline ClassProfile alternating_profile(int n) {
  ClassProfile p;
  p.degree = n;
  for (const auto& t : partitions<CycleType>(n)) {
    if (t.sign() == 1) p.counts[t] = sn_class_size(t);
  }
  return p;
}

/// S_m permuting m rigid blocks of size r inside S_{mr}: a block
/// permutation of type lambda has r cycles of length c for each part c.
inline ClassProfile block_group_profile(int m, int r) {
  if (m < 2 || r < 1) throw PreconditionError("block group needs m >= 2 and r >= 1");
  ClassProfile p;
  p.degree = m * r;
  for (const auto& lambda : partitions<CycleType>(m)) {
    std::vector<int> parts;
    for (int c : lambda.parts()) parts.insert(parts.end(), static_cast<std::size_t>(r), c);
    p.counts[CycleType(std::move(parts))] += sn_class_size(lambda);
  }
  return p;
}

/// Direct product acting on disjoint point sets: convolution of profiles.
inline ClassProfile product_profile(const ClassProfile& a, const ClassProfile& b) {
  ClassProfile p;
  p.degree = a.degree + b.degree;
  for (const auto& [ta, ca] : a.counts) {
    if (ca == 0) continue;
    for (const auto& [tb, cb] : b.counts) {
      if (cb == 0) continue;
      std::vector<int> parts = ta.parts();
      parts.insert(parts.end(), tb.parts().begin(), tb.parts().end());
      p.counts[CycleType(std::move(parts))] += ca * cb;
    }
  }
  return p;
}

/// S_{parts[0]} x S_{parts[1]} x ... on consecutive blocks.
inline ClassProfile young_profile(const std::vector<int>& parts) {
  ClassProfile p = ClassProfile::trivial(0);
  for (int k : parts) {
    if (k < 1) throw PreconditionError("Young subgroup parts must be positive");
    p = product_profile(p, symmetric_profile(k));
  }
  return p;
}

namespace generators {

inline perm::Permutation from_cycles(std::size_t n, const std::vector<std::vector<perm::Point>>& cycles) {
  std::vector<perm::Point> img(n);
  std::iota(img.begin(), img.end(), perm::Point{0});
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  }
  return perm::Permutation::from_images(std::move(img));
}

/// The k-cycle (1 2 ... k) in S_n.
inline std::vector<perm::Permutation> cyclic(int k, int n) {
  if (k < 1 || k > n) throw PreconditionError("cyclic:k@n needs 1 <= k <= n");
  std::vector<perm::Point> c;
  for (int i = 0; i < k; ++i) c.push_back(static_cast<perm::Point>(i));
  return {from_cycles(static_cast<std::size_t>(n), {c})};
}

/// Transposition and full cycle on points [start, start + len).
inline void append_symmetric(std::vector<perm::Permutation>& out, std::size_t n, perm::Point start, int len) {
  if (len < 2) return;
  out.push_back(from_cycles(n, {{start, start + 1}}));
  if (len > 2) {
    std::vector<perm::Point> c;
    for (int i = 0; i < len; ++i) c.push_back(start + static_cast<perm::Point>(i));
    out.push_back(from_cycles(n, {c}));
  }
}

inline std::vector<perm::Permutation> symmetric(int n) {
  std::vector<perm::Permutation> out;
  append_symmetric(out, static_cast<std::size_t>(n), 0, n);
  return out;
}

/// 3-cycles (1 2 i) generate A_n.
inline std::vector<perm::Permutation> alternating(int n) {
  std::vector<perm::Permutation> out;
  if (n < 3) return out;
  out.push_back(from_cycles(static_cast<std::size_t>(n), {{0, 1, 2}}));
  if (n > 3) {
    std::vector<perm::Point> c;
    // (1 2 ... n) for odd n, (2 3 ... n) for even n; both are even permutations.
    for (int i = n % 2 ? 0 : 1; i < n; ++i) c.push_back(static_cast<perm::Point>(i));
    out.push_back(from_cycles(static_cast<std::size_t>(n), {c}));
  }
  return out;
}

inline std::vector<perm::Permutation> young(const std::vector<int>& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<perm::Permutation> out;
  perm::Point start = 0;
  for (int k : parts) {
    append_symmetric(out, static_cast<std::size_t>(n), start, k);
    start += static_cast<perm::Point>(k);
  }
  return out;
}

/// S_m on m rigid blocks of size r: block swap and block m-cycle.
inline std::vector<perm::Permutation> block(int m, int r) {
  if (m < 2 || r < 1) throw PreconditionError("block group needs m >= 2 and r >= 1");
  const auto n = static_cast<std::size_t>(m * r);
  std::vector<perm::Permutation> out;
  std::vector<perm::Point> swap(n);
  std::vector<perm::Point> cycle(n);
  for (int b = 0; b < m; ++b) {
    for (int j = 0; j < r; ++j) {
      auto p = static_cast<std::size_t>(b * r + j);
      int swapped = b == 0 ? 1 : b == 1 ? 0 : b;
      swap[p] = static_cast<perm::Point>(swapped * r + j);
      cycle[p] = static_cast<perm::Point>(((b + 1) % m) * r + j);
    }
  }
  out.push_back(perm::Permutation::from_images(swap));
  if (m > 2) out.push_back(perm::Permutation::from_images(cycle));
  return out;
}

}  // namespace generators

}  // namespace hsp::lab
