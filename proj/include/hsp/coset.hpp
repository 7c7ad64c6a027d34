#pragma once

// The action of G on the right cosets X = G/H by right multiplication,
// and the fixed-point, rank and Gassmann machinery built on it.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hsp/class_profile.hpp"
#include "hsp/exact.hpp"
#include "hsp/perm_group.hpp"
#include "hsp/qfs.hpp"

namespace hsp::coset {

using perm::Permutation;
using perm::PermGroup;
using perm::Point;

class CosetAction {
 public:
  /// Enumerates G/H breadth-first from the trivial coset, applying G's
  /// generators in input order, so tables are reproducible.
  CosetAction(PermGroup parent, PermGroup subgroup, const Limits& limits = {})
      : parent_(std::move(parent)), subgroup_(std::move(subgroup)) {
    if (!perm::is_subgroup(subgroup_, parent_)) throw PreconditionError("H is not a subgroup of G");
    BigInt index = parent_.order() / subgroup_.order();
    if (index > limits.max_index) {
      throw LimitError("index |G:H| = " + index.str() + " exceeds the bound " + std::to_string(limits.max_index));
    }
    std::vector<Point> full_base(parent_.degree());
    for (std::size_t i = 0; i < full_base.size(); ++i) full_base[i] = static_cast<Point>(i);
    canon_ = PermGroup(subgroup_.degree(), subgroup_.generators(), full_base);

    add_coset(Permutation(parent_.degree()));
    images_.assign(parent_.generators().size(), {});
    for (std::size_t k = 0; k < reps_.size(); ++k) {
      for (std::size_t s = 0; s < parent_.generators().size(); ++s) {
        std::uint32_t target = add_coset(reps_[k] * parent_.generators()[s]);
        images_[s].push_back(target);
      }
    }
    if (BigInt(reps_.size()) != index) throw Error("coset enumeration found " + std::to_string(reps_.size()) + " cosets, expected " + index.str());
  }

  const PermGroup& parent() const noexcept { return parent_; }
  const PermGroup& subgroup() const noexcept { return subgroup_; }
  std::size_t index() const noexcept { return reps_.size(); }

  /// Canonical (lexicographically least) representative of each coset.
  const std::vector<Permutation>& representatives() const noexcept { return reps_; }

  /// generator_images()[s][i]: coset index of (coset i) * generator s.
  const std::vector<std::vector<std::uint32_t>>& generator_images() const noexcept { return images_; }

  /// Index of the coset Hx.
  std::uint32_t coset_of(const Permutation& x) const {
    auto it = lookup_.find(canonical(x));
    if (it == lookup_.end()) throw PreconditionError("element is not in G");
    return it->second;
  }

  /// The permutation of X induced by g in G.
  std::vector<std::uint32_t> induced(const Permutation& g) const {
    std::vector<std::uint32_t> out(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) out[i] = coset_of(reps_[i] * g);
    return out;
  }

  /// fix_X(g): cosets Hx with Hxg = Hx, i.e. x g x^-1 in H.
  std::size_t fix(const Permutation& g) const {
    if (!parent_.contains(g)) throw PreconditionError("element " + g.to_string() + " is not in G");
    std::size_t count = 0;
    for (const auto& x : reps_) count += subgroup_.contains(x * g * x.inverse());
    return count;
  }

  /// Least element (by image array) of the coset Hx, using a chain of H
  /// whose base is 0, 1, ..., n-1.
  Permutation canonical(const Permutation& x) const {
    Permutation y = x;
    for (const auto& level : canon_.chain()) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < level.orbit.size(); ++i) {
        if (y[level.orbit[i]] < y[level.orbit[best]]) best = i;
      }
      if (best != 0) y = level.transversal[best] * y;
    }
    return y;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const Permutation& p) const noexcept { return perm::PermutationHash{}(p); }
  };

  std::uint32_t add_coset(const Permutation& x) {
    Permutation key = canonical(x);
    auto [it, inserted] = lookup_.try_emplace(key, static_cast<std::uint32_t>(reps_.size()));
    if (inserted) reps_.push_back(std::move(key));
    return it->second;
  }

  PermGroup parent_;
  PermGroup subgroup_;
  PermGroup canon_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::uint32_t, KeyHash> lookup_;
  std::vector<std::vector<std::uint32_t>> images_;
};

inline std::size_t fix_in_X(const CosetAction& ca, const Permutation& g) { return ca.fix(g); }

/// Value of the permutation character on one conjugacy class of G.
struct CharacterEntry {
  Permutation representative;
  std::uint64_t class_size = 0;
  std::size_t fixed = 0;
  /// |H ∩ C|
  std::uint64_t subgroup_meet = 0;
};

/// |H ∩ C| for every class C of G.
inline std::vector<std::uint64_t> class_intersections(const perm::ConjugacyClasses& classes, const PermGroup& g,
                                                      const PermGroup& h, const Limits& limits = {}) {
  h.checked_size(limits.max_elements);
  std::vector<std::uint64_t> meet(classes.size(), 0);
  h.for_each_element([&](const Permutation& x) { ++meet[classes.class_of_rank[g.rank(x)]]; });
  return meet;
}

inline std::vector<CharacterEntry> permutation_character(const CosetAction& ca, const perm::ConjugacyClasses& classes,
                                                         const Limits& limits = {}) {
  auto meet = class_intersections(classes, ca.parent(), ca.subgroup(), limits);
  std::vector<CharacterEntry> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out.push_back({classes.representatives[c], classes.sizes[c], ca.fix(classes.representatives[c]), meet[c]});
  }
  return out;
}

inline std::vector<CharacterEntry> permutation_character(const CosetAction& ca, const Limits& limits = {}) {
  return permutation_character(ca, perm::general_classes(ca.parent(), limits), limits);
}

/// fix_X(g) |C| = |H ∩ C| |X| for every class.
inline bool class_identity_holds(const CosetAction& ca, const std::vector<CharacterEntry>& chi) {
  return std::all_of(chi.begin(), chi.end(), [&](const CharacterEntry& e) {
    return BigInt(e.fixed) * e.class_size == BigInt(e.subgroup_meet) * ca.index();
  });
}

struct RankReport {
  std::size_t rank = 0;
  /// Suborbit sizes, ascending.
  std::vector<std::size_t> subdegrees;
  /// One coset from each suborbit, aligned with `suborbit_sizes_by_orbit`.
  std::vector<std::uint32_t> suborbit_representatives;
  std::vector<std::size_t> suborbit_sizes_by_orbit;
  /// sum_{h in H} fix_X(h); rank by the orbit-counting lemma is this / |H|.
  std::optional<BigInt> fixed_point_total;
  std::optional<Rational> rank_by_frobenius;

  bool frobenius_agrees() const { return rank_by_frobenius && *rank_by_frobenius == Rational(rank); }
};

/// sum_{h in H} fix_X(h) by direct enumeration of H (|H|·|X| = |G| membership tests).
inline BigInt fixed_point_total(const CosetAction& ca, const Limits& limits = {}) {
  ca.parent().checked_size(limits.max_elements);
  BigInt total = 0;
  ca.subgroup().for_each_element([&](const Permutation& h) { total += ca.fix(h); });
  return total;
}

/// Rank and subdegrees: the orbits of H on X. Also counts the rank a second
/// way, averaging fix_X over H, when |G| is within the enumeration bound.
inline RankReport rank_subdegrees(const CosetAction& ca, const Limits& limits = {}) {
  RankReport r;
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& h : ca.subgroup().generators()) gens.push_back(ca.induced(h));
  std::vector<char> seen(ca.index(), 0);
  for (std::uint32_t start = 0; start < ca.index(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> orb{start};
    seen[start] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k) {
      for (const auto& g : gens) {
        auto y = g[orb[k]];
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    }
    r.suborbit_representatives.push_back(start);
    r.suborbit_sizes_by_orbit.push_back(orb.size());
  }
  r.rank = r.suborbit_sizes_by_orbit.size();
  r.subdegrees = r.suborbit_sizes_by_orbit;
  std::sort(r.subdegrees.begin(), r.subdegrees.end());
  if (ca.parent().order() <= limits.max_elements) {
    r.fixed_point_total = fixed_point_total(ca, limits);
    r.rank_by_frobenius = Rational(*r.fixed_point_total) / Rational(ca.subgroup().order());
  }
  return r;
}

/// |H : H ∩ H^x| for the coset Hx, by enumerating H.
inline BigInt subdegree_of(const CosetAction& ca, std::uint32_t coset, const Limits& limits = {}) {
  const auto& x = ca.representatives()[coset];
  const auto xinv = x.inverse();
  ca.subgroup().checked_size(limits.max_elements);
  std::uint64_t meet = 0;
  ca.subgroup().for_each_element([&](const Permutation& h) { meet += ca.subgroup().contains(x * h * xinv); });
  return ca.subgroup().order() / meet;
}

struct FixpointBounds {
  /// (1/|G|) sum_{h != e} fix_X(h)
  Rational bound_i;
  /// r/|X| - 1/|H|
  Rational bound_ii;
};

inline FixpointBounds fixpoint_bounds(const CosetAction& ca, const Limits& limits = {}) {
  if (ca.subgroup().is_trivial()) throw PreconditionError("fixed-point bounds need |H| >= 2");
  auto r = rank_subdegrees(ca, limits);
  FixpointBounds b;
  BigInt total = r.fixed_point_total ? *r.fixed_point_total : fixed_point_total(ca, limits);
  b.bound_i = Rational(total - ca.index()) / Rational(ca.parent().order());
  b.bound_ii = Rational(r.rank, ca.index()) - Rational(1) / Rational(ca.subgroup().order());
  return b;
}

struct AverageSubdegreeVerdict {
  Rational average;  // |X| / r
  double threshold = 0;  // (log2|G|)^c
  bool average_polylog = false;
  bool order_exceeds_polylog = false;
  Rational bound_ii;
  bool bound_implies_distinguishable = false;
};

inline AverageSubdegreeVerdict avg_subdegree_verdict(const CosetAction& ca, double c, const Limits& limits = {}) {
  AverageSubdegreeVerdict v;
  auto r = rank_subdegrees(ca, limits);
  v.average = Rational(ca.index(), r.rank);
  v.threshold = ca.parent().order() > 1 ? qfs::polylog(ca.parent().order(), c) : 0.0;
  v.average_polylog = to_double(v.average) <= v.threshold;
  v.order_exceeds_polylog = to_double(Rational(ca.subgroup().order())) > v.threshold;
  v.bound_ii = Rational(r.rank, ca.index()) - Rational(1) / Rational(ca.subgroup().order());
  v.bound_implies_distinguishable = qfs::verdict(v.bound_ii, ca.parent().order(), c);
  return v;
}

struct GassmannReport {
  bool orders_equal = false;
  /// (ii) |H ∩ C| = |K ∩ C| for every class C of G.
  bool class_intersections_equal = false;
  /// (iii) equal permutation characters on G/H and G/K.
  bool permutation_characters_equal = false;
  /// Unset when |G| exceeds the search bound.
  std::optional<bool> conjugate;
  std::optional<perm::Permutation> conjugator;
  /// (i) D(H,K), when G is the full symmetric group.
  std::optional<Rational> distance;

  bool consistent() const {
    bool same = class_intersections_equal == permutation_characters_equal;
    if (distance) same = same && ((*distance == 0) == class_intersections_equal);
    return same;
  }
};

/// Searches G for g with g^-1 H g = K.
inline std::optional<Permutation> find_conjugator(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                                 const Limits& limits = {}) {
  if (h.order() != k.order()) return std::nullopt;
  g.checked_size(limits.max_elements);
  std::optional<Permutation> found;
  // for_each_element cannot break early; the flag keeps the remaining calls cheap.
  g.for_each_element([&](const Permutation& x) {
    if (found) return;
    for (const auto& s : h.generators()) {
      if (!k.contains(s.conjugated_by(x))) return;
    }
    found = x;
  });
  return found;
}

inline GassmannReport gassmann_test(const PermGroup& g, const PermGroup& h, const PermGroup& k, const Limits& limits = {},
                                    const qfs::Options& opts = {}) {
  if (!perm::is_subgroup(h, g) || !perm::is_subgroup(k, g)) throw PreconditionError("H and K must both be subgroups of G");
  GassmannReport rep;
  rep.orders_equal = h.order() == k.order();
  if (qfs::is_full_symmetric(g)) {
    rep.distance = qfs::d_between(static_cast<int>(g.degree()), perm::class_profile(h, limits), perm::class_profile(k, limits), opts);
  }
  if (!rep.orders_equal) {
    rep.conjugate = false;
    return rep;
  }
  auto classes = perm::general_classes(g, limits);
  rep.class_intersections_equal = class_intersections(classes, g, h, limits) == class_intersections(classes, g, k, limits);

  CosetAction xh(g, h, limits);
  CosetAction xk(g, k, limits);
  rep.permutation_characters_equal = std::all_of(classes.representatives.begin(), classes.representatives.end(),
                                                 [&](const Permutation& x) { return xh.fix(x) == xk.fix(x); });
  rep.conjugator = find_conjugator(g, h, k, limits);
  rep.conjugate = rep.conjugator.has_value();
  return rep;
}

}  // namespace hsp::coset
