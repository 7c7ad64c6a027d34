#include <gtest/gtest.h>

#include <random>

#include "bridge.hpp"

using namespace hsp;
using namespace hsp::coset;
using bridge::cyc;

namespace {

PermGroup sym(int n) { return PermGroup(static_cast<std::size_t>(n), lab::generators::symmetric(n)); }

PermGroup gens(std::size_t n, std::initializer_list<const char*> texts) {
  std::vector<Permutation> g;
  for (const char* t : texts) g.push_back(cyc(n, t));
  return PermGroup(n, g);
}

// Subgroup of G generated by k random elements of G.
PermGroup random_subgroup(const PermGroup& g, std::mt19937_64& rng, int k) {
  std::vector<Permutation> out;
  const auto order = static_cast<std::uint64_t>(g.order());
  for (int i = 0; i < k; ++i) out.push_back(g.element(rng() % order));
  return PermGroup(g.degree(), out);
}

}  // namespace

TEST(CosetAction, Examples) {
  CosetAction s4s3(sym(4), gens(4, {"(1 2)", "(1 2 3)"}));
  EXPECT_EQ(s4s3.index(), 4U);
  CosetAction s3a3(sym(3), gens(3, {"(1 2 3)"}));
  EXPECT_EQ(s3a3.index(), 2U);
  CosetAction s4c4(sym(4), gens(4, {"(1 2 3 4)"}));
  EXPECT_EQ(s4c4.index(), 6U);
}

TEST(CosetAction, NaturalActionRelabelling) {
  // Cosets of the stabilizer of 4 correspond to the image of point 4.
  CosetAction ca(sym(4), gens(4, {"(1 2)", "(1 2 3)"}));
  std::vector<int> label(ca.index());
  for (std::size_t i = 0; i < ca.index(); ++i) label[i] = static_cast<int>(ca.representatives()[i][3]);
  std::set<int> distinct(label.begin(), label.end());
  EXPECT_EQ(distinct.size(), 4U);
  for (const auto& g : ca.parent().generators()) {
    auto img = ca.induced(g);
    for (std::size_t i = 0; i < ca.index(); ++i) EXPECT_EQ(label[img[i]], static_cast<int>(g[static_cast<Point>(label[i])]));
  }
}

TEST(CosetAction, Errors) {
  EXPECT_THROW(CosetAction(gens(4, {"(1 2 3 4)"}), gens(4, {"(1 2)"})), PreconditionError);
  Limits tight;
  tight.max_index = 10;
  EXPECT_THROW(CosetAction(sym(5), PermGroup(5, {}), tight), LimitError);
  CosetAction ca(gens(4, {"(1 2 3 4)"}), gens(4, {"(1 3)(2 4)"}));
  EXPECT_THROW(ca.fix(cyc(4, "(1 2)")), PreconditionError);
}

TEST(CosetAction, InvariantsOnRandomActions) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    auto g = random_subgroup(sym(n), rng, 2);
    auto h = random_subgroup(g, rng, 1 + static_cast<int>(rng() % 2));
    CosetAction ca(g, h);
    EXPECT_EQ(BigInt(ca.index()) * h.order(), g.order());
    // Induced generators generate a transitive group; the stabilizer of the
    // trivial coset has order |H|.
    std::vector<std::vector<std::uint32_t>> img = ca.generator_images();
    std::vector<char> seen(ca.index(), 0);
    std::vector<std::uint32_t> orbit{0};
    seen[0] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& s : img) {
        if (!seen[s[orbit[k]]]) {
          seen[s[orbit[k]]] = 1;
          orbit.push_back(s[orbit[k]]);
        }
      }
    }
    EXPECT_EQ(orbit.size(), ca.index());
    std::uint64_t stab = 0;
    g.for_each_element([&](const Permutation& x) { stab += ca.coset_of(x) == 0; });
    EXPECT_EQ(stab, h.order());
    // Representatives are the least element of their coset.
    for (std::size_t i = 0; i < std::min<std::size_t>(ca.index(), 5); ++i) {
      const auto& rep = ca.representatives()[i];
      h.for_each_element([&](const Permutation& y) { EXPECT_LE(rep, y * rep); });
    }
  }
}

TEST(FixInX, Examples) {
  CosetAction s4s3(sym(4), gens(4, {"(1 2)", "(1 2 3)"}));
  EXPECT_EQ(fix_in_X(s4s3, Permutation(4)), 4U);
  EXPECT_EQ(fix_in_X(s4s3, cyc(4, "(1 2)")), 2U);
  CosetAction s3a3(sym(3), gens(3, {"(1 2 3)"}));
  EXPECT_EQ(fix_in_X(s3a3, cyc(3, "(1 2 3)")), 2U);
}

TEST(FixInX, MatchesInducedPermutation) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_subgroup(sym(6), rng, 2);
    auto h = random_subgroup(g, rng, 1);
    CosetAction ca(g, h);
    for (int probe = 0; probe < 10; ++probe) {
      auto x = g.element(static_cast<std::uint64_t>(rng() % static_cast<std::uint64_t>(g.order())));
      auto img = ca.induced(x);
      std::size_t fixed = 0;
      for (std::size_t i = 0; i < img.size(); ++i) fixed += img[i] == i;
      EXPECT_EQ(ca.fix(x), fixed);
    }
  }
}

TEST(PermutationCharacter, ClassIdentityAndFrobenius) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    auto g = random_subgroup(sym(n), rng, 2);
    auto h = random_subgroup(g, rng, 1 + static_cast<int>(rng() % 2));
    CosetAction ca(g, h);
    auto chi = permutation_character(ca);
    EXPECT_TRUE(class_identity_holds(ca, chi));
    std::uint64_t meet_total = 0;
    for (const auto& e : chi) {
      EXPECT_EQ(BigInt(e.fixed) * e.class_size, BigInt(e.subgroup_meet) * ca.index());
      meet_total += e.subgroup_meet;
    }
    EXPECT_EQ(meet_total, h.order());
    auto r = rank_subdegrees(ca);
    EXPECT_TRUE(r.frobenius_agrees());
    EXPECT_EQ(*r.fixed_point_total, BigInt(r.rank) * h.order());
  }
}

TEST(RankSubdegrees, Examples) {
  auto r1 = rank_subdegrees(CosetAction(sym(4), gens(4, {"(1 2)", "(1 2 3)"})));
  EXPECT_EQ(r1.rank, 2U);
  EXPECT_EQ(r1.subdegrees, (std::vector<std::size_t>{1, 3}));
  auto r2 = rank_subdegrees(CosetAction(sym(3), gens(3, {"(1 2 3)"})));
  EXPECT_EQ(r2.rank, 2U);
  EXPECT_EQ(r2.subdegrees, (std::vector<std::size_t>{1, 1}));
  auto r3 = rank_subdegrees(CosetAction(sym(4), gens(4, {"(1 2)(3 4)", "(1 3)(2 4)"})));
  EXPECT_EQ(r3.rank, 6U);
  EXPECT_EQ(r3.subdegrees, std::vector<std::size_t>(6, 1));
  EXPECT_TRUE(r1.frobenius_agrees() && r2.frobenius_agrees() && r3.frobenius_agrees());
}

TEST(RankSubdegrees, Properties) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    auto g = random_subgroup(sym(n), rng, 2);
    auto h = random_subgroup(g, rng, 1);
    CosetAction ca(g, h);
    auto r = rank_subdegrees(ca);
    std::size_t sum = 0;
    for (auto d : r.subdegrees) sum += d;
    EXPECT_EQ(sum, ca.index());
    // Subdegree 1 appears once for every coset fixed by all of H.
    std::size_t fixed_by_h = 0;
    for (std::uint32_t x = 0; x < ca.index(); ++x) {
      bool all = true;
      for (const auto& s : h.generators()) all = all && ca.induced(s)[x] == x;
      fixed_by_h += all;
    }
    EXPECT_EQ(static_cast<std::size_t>(std::count(r.subdegrees.begin(), r.subdegrees.end(), 1U)), fixed_by_h);
    for (std::size_t k = 0; k < r.rank; ++k) {
      EXPECT_EQ(subdegree_of(ca, r.suborbit_representatives[k]), r.suborbit_sizes_by_orbit[k]);
    }
  }
}

TEST(RankSubdegrees, NormalSubgroupsHaveUnitSubdegrees) {
  for (int n = 3; n <= 6; ++n) {
    auto r = rank_subdegrees(CosetAction(sym(n), PermGroup(static_cast<std::size_t>(n), lab::generators::alternating(n))));
    EXPECT_EQ(r.subdegrees, (std::vector<std::size_t>{1, 1}));
  }
}

TEST(FixpointBounds, Examples) {
  auto a = fixpoint_bounds(CosetAction(sym(3), gens(3, {"(1 2 3)"})));
  EXPECT_EQ(a.bound_ii, Rational(2, 3));
  EXPECT_EQ(a.bound_i, a.bound_ii);
  auto t = fixpoint_bounds(CosetAction(sym(3), gens(3, {"(1 2)"})));
  EXPECT_EQ(t.bound_ii, Rational(1, 6));
  auto v = fixpoint_bounds(CosetAction(sym(4), gens(4, {"(1 2)(3 4)", "(1 3)(2 4)"})));
  EXPECT_EQ(v.bound_ii, Rational(3, 4));
  EXPECT_THROW(fixpoint_bounds(CosetAction(sym(3), PermGroup(3, {}))), PreconditionError);
}

TEST(FixpointBounds, BelowDhAndEqualToClassLowerBound) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto h = random_subgroup(sym(n), rng, 1 + static_cast<int>(rng() % 2));
    if (h.is_trivial()) continue;
    auto b = fixpoint_bounds(CosetAction(sym(n), h));
    auto prof = perm::class_profile(h);
    EXPECT_EQ(b.bound_i, b.bound_ii);
    EXPECT_LT(b.bound_i, qfs::dh_exact(n, prof));
    EXPECT_EQ(b.bound_i, qfs::thm1_bounds(n, prof, {}, false).lower);
  }
}

TEST(AverageSubdegree, Examples) {
  auto normal = avg_subdegree_verdict(CosetAction(sym(3), gens(3, {"(1 2 3)"})), 1);
  EXPECT_EQ(normal.average, 1);
  EXPECT_TRUE(normal.average_polylog);
  EXPECT_TRUE(normal.bound_implies_distinguishable);

  auto s4 = avg_subdegree_verdict(CosetAction(sym(4), gens(4, {"(1 2)", "(1 2 3)"})), 1);
  EXPECT_EQ(s4.average, 2);

  auto c8 = CosetAction(sym(8), gens(8, {"(1 2 3 4 5 6 7 8)"}));
  auto r = rank_subdegrees(c8);
  auto v = avg_subdegree_verdict(c8, 1);
  // Frobenius: (5040 + 4*4 + 2*8 + 48) / 8 = 640 suborbits.
  EXPECT_EQ(r.rank, 640U);
  EXPECT_EQ(v.average, Rational(63, 8));
  EXPECT_EQ(v.bound_ii, Rational(640, 5040) - Rational(1, 8));
  EXPECT_FALSE(v.bound_implies_distinguishable);
}

TEST(Gassmann, ConjugateTranspositions) {
  auto rep = gassmann_test(sym(3), gens(3, {"(1 2)"}), gens(3, {"(1 3)"}));
  EXPECT_TRUE(rep.orders_equal);
  EXPECT_TRUE(rep.class_intersections_equal);
  EXPECT_TRUE(rep.permutation_characters_equal);
  EXPECT_EQ(*rep.distance, 0);
  EXPECT_TRUE(*rep.conjugate);
  auto x = *rep.conjugator;
  EXPECT_TRUE(gens(3, {"(1 3)"}).contains(cyc(3, "(1 2)").conjugated_by(x)));
  EXPECT_TRUE(rep.consistent());
}

TEST(Gassmann, DifferentOrders) {
  auto rep = gassmann_test(sym(3), gens(3, {"(1 2)"}), gens(3, {"(1 2 3)"}));
  EXPECT_FALSE(rep.orders_equal);
  EXPECT_FALSE(rep.class_intersections_equal);
  EXPECT_FALSE(*rep.conjugate);
  EXPECT_EQ(*rep.distance, Rational(4, 3));
  EXPECT_TRUE(rep.consistent());
}

TEST(Gassmann, ProjectivePlanePair) {
  auto g = catalog::gl32().group();
  auto h = catalog::gl32_point().group();
  auto k = catalog::gl32_plane().group();
  EXPECT_EQ(g.order(), 168);
  EXPECT_EQ(h.order(), 24);
  EXPECT_EQ(k.order(), 24);
  auto rep = gassmann_test(g, h, k);
  EXPECT_TRUE(rep.class_intersections_equal);
  EXPECT_TRUE(rep.permutation_characters_equal);
  EXPECT_FALSE(*rep.conjugate);
  EXPECT_FALSE(rep.distance.has_value());
  EXPECT_TRUE(rep.consistent());
  // Inside S_7 the two have equal profiles, hence D(H,K) = 0.
  EXPECT_EQ(qfs::d_between(7, perm::class_profile(h), perm::class_profile(k)), 0);
}

TEST(Gassmann, ProjectivePlanePairByBruteForce) {
  // Independent check with plain element lists.
  std::vector<oracle::Perm> gg, hg, kg;
  for (const auto& p : catalog::gl32().generators) gg.push_back(bridge::to_oracle(p));
  for (const auto& p : catalog::gl32_point().generators) hg.push_back(bridge::to_oracle(p));
  for (const auto& p : catalog::gl32_plane().generators) kg.push_back(bridge::to_oracle(p));
  auto G = oracle::closure(gg, 7);
  auto H = oracle::closure(hg, 7);
  auto K = oracle::closure(kg, 7);
  ASSERT_EQ(G.size(), 168U);
  std::set<oracle::Perm> gs(G.begin(), G.end());
  for (const auto& x : H) EXPECT_TRUE(gs.count(x));
  for (const auto& x : K) EXPECT_TRUE(gs.count(x));
  // Point 1 is fixed by H; K fixes the set {1,2,3}.
  for (const auto& x : H) EXPECT_EQ(x[0], 0);
  for (const auto& x : K) EXPECT_LT(x[0], 3);
  std::set<oracle::Perm> ks(K.begin(), K.end());
  bool conjugate = false;
  for (const auto& y : G) {
    bool all = true;
    for (const auto& h : H) all = all && ks.count(oracle::compose(oracle::compose(oracle::invert(y), h), y));
    conjugate = conjugate || all;
  }
  EXPECT_FALSE(conjugate);
  auto classes = perm::general_classes(catalog::gl32().group());
  auto g = catalog::gl32().group();
  std::vector<int> hc(classes.size()), kc(classes.size());
  for (const auto& x : H) ++hc[classes.class_of_rank[g.rank(bridge::to_hsp(x))]];
  for (const auto& x : K) ++kc[classes.class_of_rank[g.rank(bridge::to_hsp(x))]];
  EXPECT_EQ(hc, kc);
}

TEST(Gassmann, VerdictsAgreeOnRandomPairs) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    auto g = sym(n);
    auto h = random_subgroup(g, rng, 1 + static_cast<int>(rng() % 2));
    PermGroup k;
    if (trial % 2 == 0) {
      auto y = g.element(rng() % static_cast<std::uint64_t>(g.order()));
      std::vector<Permutation> conj;
      for (const auto& s : h.generators()) conj.push_back(s.conjugated_by(y));
      k = PermGroup(g.degree(), conj);
    } else {
      k = random_subgroup(g, rng, 1 + static_cast<int>(rng() % 2));
    }
    auto rep = gassmann_test(g, h, k);
    EXPECT_TRUE(rep.consistent());
    if (trial % 2 == 0) {
      EXPECT_TRUE(*rep.conjugate);
    }
    if (rep.conjugate && *rep.conjugate) {
      EXPECT_TRUE(rep.class_intersections_equal);
    }
  }
}
