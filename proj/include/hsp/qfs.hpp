#pragma once

// Weak Fourier sampling over S_n, computed exactly from a class profile.
//
// For H <= S_n the weak standard method measures the irrep lambda with
// probability P_H(lambda) = d_lambda / n! * sum_{h in H} chi_lambda(h).
// Everything here depends on H only through its ClassProfile, except
// poly_subgroup_verdict, which works for an arbitrary parent group G.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "hsp/characters.hpp"
#include "hsp/class_profile.hpp"
#include "hsp/exact.hpp"
#include "hsp/parallel.hpp"
#include "hsp/partition.hpp"
#include "hsp/perm_group.hpp"
#include "hsp/sqrt_sum.hpp"

namespace hsp::qfs {

/// Exact probability per irrep (partition) of S_n.
struct IrrepDistribution {
  int degree = 0;
  CanonicalMap<Partition, Rational> probs;

  Rational total() const {
    Rational t = 0;
    for (const auto& [shape, p] : probs) t += p;
    return t;
  }

  Rational at(const Partition& shape) const {
    auto it = probs.find(shape);
    return it == probs.end() ? Rational(0) : it->second;
  }
};

struct Options {
  unsigned threads = 1;
  /// Fractional digits in decimal renderings.
  unsigned digits = 20;
};

/// For each shape lambda: d_lambda and S_lambda = sum_{h in H} chi_lambda(h).
struct CharacterSums {
  std::vector<Partition> shapes;
  std::vector<BigInt> dimensions;
  std::vector<BigInt> sums;
};

inline void check_profile(int n, const ClassProfile& prof) {
  if (prof.degree != n) {
    throw PreconditionError("profile has degree " + std::to_string(prof.degree) + " but the analysis is for S_" + std::to_string(n));
  }
  prof.validate();
}

/// Character columns are evaluated per cycle type in parallel, one memo
/// cache per worker; the reduction over types runs in a fixed order.
inline CharacterSums character_sums(const ClassProfile& prof, unsigned threads = 1) {
  CharacterSums out;
  out.shapes = partitions<Partition>(prof.degree);
  out.dimensions.reserve(out.shapes.size());
  for (const auto& s : out.shapes) out.dimensions.push_back(characters::dimension(s));

  std::vector<std::pair<CycleType, BigInt>> types;
  for (const auto& [t, c] : prof.counts) {
    if (c != 0 && !t.is_identity()) types.emplace_back(t, c);
  }
  std::vector<std::vector<BigInt>> columns(types.size());
  std::vector<characters::CharacterCache> caches(std::max(1U, threads));
  parallel_for(types.size(), threads, [&](std::size_t worker, std::size_t i) {
    columns[i] = caches[worker].column(out.shapes, types[i].first);
  });

  out.sums = out.dimensions;  // identity contributes chi(e) = d
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t a = 0; a < out.shapes.size(); ++a) out.sums[a] += types[i].second * columns[i][a];
  }
  return out;
}

inline IrrepDistribution distribution_from_sums(const CharacterSums& cs, int n) {
  IrrepDistribution d;
  d.degree = n;
  const Rational order(factorial(static_cast<unsigned>(n)));
  for (std::size_t a = 0; a < cs.shapes.size(); ++a) d.probs[cs.shapes[a]] = Rational(cs.dimensions[a] * cs.sums[a]) / order;
  return d;
}

inline IrrepDistribution weak_distribution(int n, const ClassProfile& prof, const Options& opts = {}) {
  check_profile(n, prof);
  return distribution_from_sums(character_sums(prof, opts.threads), n);
}

/// L1 distance between two distributions over the same S_n.
inline Rational l1_distance(const IrrepDistribution& a, const IrrepDistribution& b) {
  if (a.degree != b.degree) throw PreconditionError("distributions over different degrees");
  Rational total = 0;
  for (const auto& [shape, p] : a.probs) total += abs(p - b.at(shape));
  for (const auto& [shape, q] : b.probs) {
    if (!a.probs.contains(shape)) total += abs(q);
  }
  return total;
}

/// D_H = (1/n!) sum_lambda d_lambda |sum_{h != e} chi_lambda(h)|.
inline Rational dh_from_sums(const CharacterSums& cs, int n) {
  BigInt total = 0;
  for (std::size_t a = 0; a < cs.shapes.size(); ++a) total += cs.dimensions[a] * abs_big(cs.sums[a] - cs.dimensions[a]);
  return Rational(total) / Rational(factorial(static_cast<unsigned>(n)));
}

inline Rational dh_exact(int n, const ClassProfile& prof, const Options& opts = {}) {
  check_profile(n, prof);
  return dh_from_sums(character_sums(prof, opts.threads), n);
}

/// D(H,K) = |P_H - P_K|_1.
inline Rational d_between(int n, const ClassProfile& a, const ClassProfile& b, const Options& opts = {}) {
  return l1_distance(weak_distribution(n, a, opts), weak_distribution(n, b, opts));
}

/// Both sides of a lower/upper bound on D_H. The upper bound is a sum of
/// inverse square roots and is kept symbolically exact.
struct BoundsReport {
  Rational lower;
  std::optional<Rational> exact_value;
  SqrtSum upper;
  /// Square of the upper bound, when it is a single term.
  std::optional<Rational> upper_sq;
  std::string upper_decimal;
  unsigned precision = 0;
  /// Set by cmin_bounds: the smallest class meeting H non-trivially.
  std::optional<CycleType> c_min;
  BigInt c_min_size = 0;

  bool lower_below_exact() const { return exact_value && lower < *exact_value; }
  bool exact_within_upper() const { return exact_value && upper.compare(*exact_value) != std::strong_ordering::less; }
  bool sandwich_holds() const { return lower_below_exact() && exact_within_upper(); }
};

inline void require_nontrivial(const ClassProfile& prof) {
  if (prof.is_trivial()) throw PreconditionError("the bound needs a non-trivial subgroup (|H| >= 2)");
}

inline void finish_upper(BoundsReport& r, unsigned digits) {
  r.upper_sq = r.upper.square();
  r.precision = digits;
  r.upper_decimal = r.upper.to_decimal(digits);
}

/// sum_i |C_i ∩ H|^2 / (|H||C_i|)  <  D_H  <=  sum_i |C_i ∩ H| / sqrt|C_i|
/// over the non-identity classes of S_n.
inline BoundsReport thm1_bounds(int n, const ClassProfile& prof, const Options& opts = {}, bool with_exact = true) {
  check_profile(n, prof);
  require_nontrivial(prof);
  BoundsReport r;
  const BigInt order = prof.order();
  for (const auto& [t, c] : prof.counts) {
    if (c == 0 || t.is_identity()) continue;
    BigInt size = sn_class_size(t);
    r.lower += Rational(c * c) / Rational(order * size);
    r.upper.add(Rational(c), size);
  }
  finish_upper(r, opts.digits);
  if (with_exact) r.exact_value = dh_exact(n, prof, opts);
  return r;
}

/// |H|^-1 |C_min|^-1  <  D_H  <=  (|H| - 1) |C_min|^-1/2.
inline BoundsReport cmin_bounds(int n, const ClassProfile& prof, const Options& opts = {}) {
  check_profile(n, prof);
  require_nontrivial(prof);
  BoundsReport r;
  for (const auto& [t, c] : prof.counts) {
    if (c == 0 || t.is_identity()) continue;
    BigInt size = sn_class_size(t);
    if (!r.c_min || size < r.c_min_size) {
      r.c_min = t;
      r.c_min_size = size;
    }
  }
  const BigInt order = prof.order();
  r.lower = Rational(1) / Rational(order * r.c_min_size);
  r.upper.add(Rational(order - 1), r.c_min_size);
  finish_upper(r, opts.digits);
  return r;
}

/// Element-wise upper bound  sum_{1 != h in H} |h^G|^-1/2  for G = S_n.
struct DecimalValue {
  SqrtSum exact;
  std::string decimal;
  unsigned precision = 0;
};

inline DecimalValue prop_upper(int n, const ClassProfile& prof, const Options& opts = {}) {
  check_profile(n, prof);
  DecimalValue v;
  for (const auto& [t, c] : prof.counts) {
    if (c == 0 || t.is_identity()) continue;
    v.exact.add(Rational(c), sn_class_size(t));
  }
  v.precision = opts.digits;
  v.decimal = v.exact.to_decimal(opts.digits);
  return v;
}

/// (log2 |G|)^e; all polylogarithmic thresholds use base 2.
inline double polylog(const BigInt& group_order, double exponent) {
  return std::pow(log2_big(group_order), exponent);
}

/// True iff D >= (log2 |G|)^-c. A fixed-n report, not an asymptotic claim.
inline bool verdict(const Rational& d, const BigInt& group_order, double c) {
  if (d <= 0) return false;
  double logg = log2_big(group_order);
  if (logg <= 0) return false;
  return to_double(d) >= std::pow(logg, -c);
}

struct PolyVerdict {
  bool applicable = false;
  std::string reason;
  double log2_order = 0;
  double order_threshold = 0;  // (log2|G|)^c
  double class_threshold = 0;  // (log2|G|)^c'
  std::optional<perm::Permutation> witness;
  BigInt witness_class_size = 0;
  std::optional<std::size_t> witness_support;  // when G = S_n
  bool distinguishable_side = false;
};

inline bool is_full_symmetric(const perm::PermGroup& g) {
  return g.order() == factorial(static_cast<unsigned>(g.degree()));
}

/// For |H| <= (log2|G|)^c: H is on the distinguishable side iff some
/// non-identity h in H has |h^G| <= (log2|G|)^c'. The witness is the
/// element with the smallest class.
inline PolyVerdict poly_subgroup_verdict(const perm::PermGroup& g, const perm::PermGroup& h, double c, double c_prime,
                                         const Limits& limits = {}) {
  PolyVerdict v;
  v.log2_order = g.order() > 1 ? log2_big(g.order()) : 0.0;
  v.order_threshold = std::pow(v.log2_order, c);
  v.class_threshold = std::pow(v.log2_order, c_prime);
  if (h.is_trivial()) {
    v.reason = "H has no non-identity element";
    return v;
  }
  if (!perm::is_subgroup(h, g)) throw PreconditionError("H is not a subgroup of G");
  if (h.order() > BigInt(static_cast<std::uint64_t>(std::floor(std::min(v.order_threshold, 1e18))))) {
    v.reason = "|H| = " + h.order().str() + " exceeds (log2|G|)^c";
    return v;
  }
  v.applicable = true;
  const bool symmetric = is_full_symmetric(g);
  h.for_each_element([&](const perm::Permutation& x) {
    if (x.is_identity()) return;
    BigInt size = symmetric ? sn_class_size(x.cycle_type()) : BigInt(perm::class_size_in(g, x, limits));
    if (!v.witness || size < v.witness_class_size) {
      v.witness = x;
      v.witness_class_size = size;
    }
  });
  if (symmetric) v.witness_support = v.witness->support();
  v.distinguishable_side = v.witness_class_size <= BigInt(static_cast<std::uint64_t>(std::floor(std::min(v.class_threshold, 1e18))));
  return v;
}

}  // namespace hsp::qfs
