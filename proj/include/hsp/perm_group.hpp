#pragma once

// Permutation groups given by generators, backed by a deterministic
// Schreier-Sims stabilizer chain (smallest-moved-point base).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "hsp/class_profile.hpp"
#include "hsp/exact.hpp"
#include "hsp/perm.hpp"

namespace hsp::perm {

class PermGroup {
 public:
  /// One level of the stabilizer chain: the orbit of `base` under the
  /// pointwise stabilizer of all earlier base points, with a transversal.
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<std::int32_t> position;  // point -> index into orbit, -1 if absent
    std::vector<Point> orbit;
    std::vector<Permutation> transversal;  // transversal[i] maps base to orbit[i]
    std::vector<Permutation> inverse_transversal;
  };

  PermGroup() : PermGroup(0, {}) {}

  /// `base_prefix` forces the first base points (used for lexicographic
  /// coset canonization); further points are appended as needed.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Point> base_prefix = {})
      : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
      if (g.degree() != degree_) throw PreconditionError("generators have mixed degrees");
    }
    build(base_prefix);
  }

  /// Degree taken from the generators; all must agree.
  static PermGroup from_generators(std::vector<Permutation> generators, std::size_t degree_if_empty = 0) {
    std::size_t n = generators.empty() ? degree_if_empty : generators.front().degree();
    return PermGroup(n, std::move(generators));
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Level>& chain() const noexcept { return levels_; }
  const BigInt& order() const noexcept { return order_; }
  bool is_trivial() const { return order_ == 1; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  /// Strips g through the chain starting at level `from`. Returns the
  /// residue and the level at which sifting stopped (chain length if it
  /// passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& lv = levels_[l];
      std::int32_t pos = lv.position[g[lv.base]];
      if (pos < 0) return {std::move(g), l};
      g = g * lv.inverse_transversal[static_cast<std::size_t>(pos)];
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    return sift(g).first.is_identity();
  }

  /// Index of g in the enumeration order of for_each_element.
  std::uint64_t rank(const Permutation& g) const {
    std::uint64_t r = 0;
    std::uint64_t stride = 1;
    Permutation cur = g;
    for (const Level& lv : levels_) {
      std::int32_t pos = lv.position[cur[lv.base]];
      if (pos < 0) throw PreconditionError("element not in group: " + g.to_string());
      r += stride * static_cast<std::uint64_t>(pos);
      stride *= lv.orbit.size();
      cur = cur * lv.inverse_transversal[static_cast<std::size_t>(pos)];
    }
    if (!cur.is_identity()) throw PreconditionError("element not in group: " + g.to_string());
    return r;
  }

  /// Inverse of rank().
  Permutation element(std::uint64_t r) const {
    std::vector<std::size_t> pos(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      pos[l] = r % levels_[l].orbit.size();
      r /= levels_[l].orbit.size();
    }
    Permutation g(degree_);
    for (std::size_t l = levels_.size(); l-- > 0;) g = g * levels_[l].transversal[pos[l]];
    return g;
  }

  /// Enumeration size as a machine integer; throws LimitError above `max`.
  std::uint64_t checked_size(std::uint64_t max) const {
    if (order_ > max) throw LimitError("group order " + order_.str() + " exceeds the enumeration bound " + std::to_string(max));
    return static_cast<std::uint64_t>(order_);
  }

  /// Calls f(g) for every element, in rank order. Identity comes first.
  template <class F>
  void for_each_element(F&& f) const {
    if (levels_.empty()) {
      f(Permutation(degree_));
      return;
    }
    const std::size_t k = levels_.size();
    std::vector<std::size_t> idx(k, 0);
    // prefix[l] = t_{k-1}[idx] * ... * t_l[idx]
    std::vector<Permutation> prefix(k + 1, Permutation(degree_));
    for (std::size_t l = k; l-- > 0;) prefix[l] = prefix[l + 1] * levels_[l].transversal[0];
    for (;;) {
      f(prefix[0]);
      std::size_t l = 0;
      while (l < k && ++idx[l] == levels_[l].orbit.size()) {
        idx[l] = 0;
        ++l;
      }
      if (l == k) return;
      for (std::size_t m = l + 1; m-- > 0;) prefix[m] = prefix[m + 1] * levels_[m].transversal[idx[m]];
    }
  }

  std::vector<Permutation> elements(std::uint64_t max) const {
    std::vector<Permutation> out;
    out.reserve(checked_size(max));
    for_each_element([&](const Permutation& g) { out.push_back(g); });
    return out;
  }

 private:
  void build(const std::vector<Point>& base_prefix) {
    for (Point b : base_prefix) {
      if (b >= degree_) throw PreconditionError("base point out of range");
      add_level(b);
    }
    for (const auto& g : generators_) {
      if (g.is_identity()) continue;
      bool fixes_base = std::all_of(levels_.begin(), levels_.end(), [&](const Level& l) { return g[l.base] == l.base; });
      if (fixes_base) add_level(g.first_moved());
    }
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      for (const auto& g : generators_) {
        if (g.is_identity()) continue;
        bool fixes_prefix = true;
        for (std::size_t m = 0; m < l; ++m) fixes_prefix = fixes_prefix && g[levels_[m].base] == levels_[m].base;
        if (fixes_prefix) levels_[l].generators.push_back(g);
      }
      extend_orbit(l);
    }

    // checked[l][s][pos]: Schreier generator (orbit[pos], generators[s]) already sifted.
    std::vector<std::vector<std::vector<char>>> checked(levels_.size());
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      const auto li = static_cast<std::size_t>(i);
      bool restarted = false;
      for (std::size_t s = 0; s < levels_[li].generators.size() && !restarted; ++s) {
        if (checked[li].size() <= s) checked[li].resize(s + 1);
        auto& done = checked[li][s];
        done.resize(levels_[li].orbit.size(), 0);
        for (std::size_t pos = 0; pos < levels_[li].orbit.size(); ++pos) {
          if (done[pos]) continue;
          done[pos] = 1;
          const Level& lv = levels_[li];
          const Permutation& gen = lv.generators[s];
          Point image = gen[lv.orbit[pos]];
          auto ipos = static_cast<std::size_t>(lv.position[image]);
          Permutation schreier = lv.transversal[pos] * gen * lv.inverse_transversal[ipos];
          auto [residue, j] = sift(std::move(schreier), li + 1);
          if (residue.is_identity()) continue;
          if (j == levels_.size()) {
            add_level(residue.first_moved());
            checked.emplace_back();
          }
          for (std::size_t l = li + 1; l <= j; ++l) {
            levels_[l].generators.push_back(residue);
            extend_orbit(l);
          }
          i = static_cast<std::ptrdiff_t>(j);
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }

    order_ = 1;
    for (const auto& l : levels_) order_ *= l.orbit.size();
  }

  void add_level(Point base) {
    Level l;
    l.base = base;
    l.position.assign(degree_, -1);
    l.position[base] = 0;
    l.orbit.push_back(base);
    l.transversal.emplace_back(degree_);
    l.inverse_transversal.emplace_back(degree_);
    levels_.push_back(std::move(l));
  }

  // Grows the orbit without touching existing transversal entries, so
  // Schreier generators already verified stay valid.
  void extend_orbit(std::size_t li) {
    Level& l = levels_[li];
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      for (const auto& g : l.generators) {
        Point img = g[l.orbit[k]];
        if (l.position[img] >= 0) continue;
        l.position[img] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(img);
        Permutation t = l.transversal[k] * g;
        l.inverse_transversal.push_back(t.inverse());
        l.transversal.push_back(std::move(t));
      }
    }
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

inline bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) return false;
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const Permutation& x) { return g.contains(x); });
}

/// Orbits of the group on {0..n-1}, each sorted, ordered by least point.
inline std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(g.degree(), 0);
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> orb{start};
    seen[start] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k) {
      for (const auto& s : g.generators()) {
        Point y = s[orb[k]];
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

inline bool is_transitive(const PermGroup& g) { return g.degree() == 0 || orbits(g).size() == 1; }

namespace detail {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Finest block system in which a and b share a block.
inline std::vector<std::vector<Point>> block_closure(const PermGroup& g, Point a, Point b) {
  UnionFind uf(g.degree());
  std::queue<std::pair<Point, Point>> pending;
  if (uf.unite(a, b)) pending.emplace(a, b);
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop();
    for (const auto& s : g.generators()) {
      if (uf.unite(s[x], s[y])) pending.emplace(s[x], s[y]);
    }
  }
  std::vector<std::vector<Point>> blocks;
  std::vector<std::int64_t> slot(g.degree(), -1);
  for (Point p = 0; p < g.degree(); ++p) {
    Point r = uf.find(p);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[r])].push_back(p);
  }
  return blocks;
}

}  // namespace detail

/// A non-trivial block system with minimal block size, or nullopt when the
/// group is primitive. Throws PreconditionError for intransitive groups.
inline std::optional<std::vector<std::vector<Point>>> minimal_blocks(const PermGroup& g) {
  if (!is_transitive(g)) throw PreconditionError("primitivity is only defined here for transitive groups");
  std::optional<std::vector<std::vector<Point>>> best;
  for (Point w = 1; w < g.degree(); ++w) {
    auto blocks = detail::block_closure(g, 0, w);
    if (blocks.size() == 1) continue;
    if (!best || blocks.front().size() < best->front().size()) best = std::move(blocks);
  }
  return best;
}

inline bool is_primitive(const PermGroup& g) { return !minimal_blocks(g).has_value(); }

/// m(H): least support of a non-identity element, by enumeration.
inline std::size_t minimal_degree(const PermGroup& h, const Limits& limits = {}) {
  if (h.is_trivial()) throw PreconditionError("minimal degree is undefined for the trivial group");
  h.checked_size(limits.max_elements);
  std::size_t best = h.degree();
  h.for_each_element([&](const Permutation& x) {
    std::size_t s = x.support();
    if (s > 0 && s < best) best = s;
  });
  return best;
}

/// Census of the group's elements by S_n cycle type, by enumeration.
inline ClassProfile class_profile(const PermGroup& h, const Limits& limits = {}) {
  h.checked_size(limits.max_elements);
  ClassProfile prof;
  prof.degree = static_cast<int>(h.degree());
  std::map<std::vector<int>, std::uint64_t> raw;
  h.for_each_element([&](const Permutation& x) { ++raw[x.cycle_type().parts()]; });
  for (auto& [parts, c] : raw) prof.counts[CycleType(parts)] = c;
  return prof;
}

/// Conjugacy classes of an enumerable group. Representatives are the
/// least-rank element of each class; classes are listed in order of
/// their representative's rank (so the identity class comes first).
struct ConjugacyClasses {
  std::vector<Permutation> representatives;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of_rank;

  std::size_t size() const noexcept { return representatives.size(); }
};

inline ConjugacyClasses general_classes(const PermGroup& g, const Limits& limits = {}) {
  const std::uint64_t n = g.checked_size(limits.max_elements);
  constexpr std::uint32_t unset = UINT32_MAX;
  ConjugacyClasses out;
  out.class_of_rank.assign(n, unset);
  std::vector<Permutation> inv;
  for (const auto& s : g.generators()) inv.push_back(s.inverse());
  for (std::uint64_t r = 0; r < n; ++r) {
    if (out.class_of_rank[r] != unset) continue;
    auto id = static_cast<std::uint32_t>(out.representatives.size());
    Permutation rep = g.element(r);
    out.class_of_rank[r] = id;
    std::vector<Permutation> frontier{rep};
    std::uint64_t size = 1;
    while (!frontier.empty()) {
      Permutation x = std::move(frontier.back());
      frontier.pop_back();
      for (std::size_t k = 0; k < inv.size(); ++k) {
        Permutation y = inv[k] * x * g.generators()[k];
        std::uint64_t ry = g.rank(y);
        if (out.class_of_rank[ry] == unset) {
          out.class_of_rank[ry] = id;
          ++size;
          frontier.push_back(std::move(y));
        }
      }
    }
    out.representatives.push_back(std::move(rep));
    out.sizes.push_back(size);
  }
  return out;
}

/// Size of the G-conjugacy class of x, by orbit enumeration under conjugation.
inline std::uint64_t class_size_in(const PermGroup& g, const Permutation& x, const Limits& limits = {}) {
  g.checked_size(limits.max_elements);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Permutation> frontier{x};
  seen[g.rank(x)] = 1;
  std::uint64_t size = 1;
  while (!frontier.empty()) {
    Permutation y = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& s : g.generators()) {
      Permutation z = y.conjugated_by(s);
      auto rz = g.rank(z);
      if (!seen[rz]) {
        seen[rz] = 1;
        ++size;
        frontier.push_back(std::move(z));
      }
    }
  }
  return size;
}

}  // namespace hsp::perm
