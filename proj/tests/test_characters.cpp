#include <gtest/gtest.h>

#include <random>

#include "bridge.hpp"

using namespace hsp;
using namespace hsp::characters;

TEST(Partitions, Counts) {
  EXPECT_EQ(partitions(1), (std::vector<Partition>{Partition({1})}));
  EXPECT_EQ(partitions(4).size(), 5U);
  EXPECT_EQ(partitions(30).size(), 5604U);
  EXPECT_EQ(partitions(0).size(), 1U);
  for (int n = 1; n <= 40; ++n) EXPECT_EQ(partitions(n).size(), oracle::partition_count(n)) << n;
}

TEST(Partitions, ReverseLexicographicAndDistinct) {
  for (int n = 1; n <= 15; ++n) {
    auto ps = partitions(n);
    EXPECT_EQ(ps.front(), Partition({n}));
    EXPECT_EQ(ps.back(), Partition::identity(n));
    for (std::size_t i = 1; i < ps.size(); ++i) {
      EXPECT_TRUE(std::lexicographical_compare(ps[i].parts().begin(), ps[i].parts().end(), ps[i - 1].parts().begin(),
                                               ps[i - 1].parts().end()));
    }
    for (const auto& p : ps) {
      EXPECT_EQ(p.size(), n);
      EXPECT_TRUE(std::is_sorted(p.parts().rbegin(), p.parts().rend()));
    }
  }
}

TEST(Partitions, ConjugateIsInvolution) {
  for (const auto& p : partitions(12)) {
    EXPECT_EQ(p.conjugate().conjugate(), p);
    EXPECT_EQ(p.conjugate().size(), 12);
  }
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(Partition({7})), 1);
  EXPECT_EQ(dimension(Partition({2, 1})), 2);
  EXPECT_EQ(dimension(Partition({3, 2})), 5);
  EXPECT_EQ(hook_lengths(Partition({3, 2})), (std::vector<int>{4, 3, 1, 2, 1}));
}

TEST(Dimension, MatchesTableauCount) {
  for (int n = 1; n <= 14; ++n) {
    for (const auto& p : partitions(n)) EXPECT_EQ(dimension(p), oracle::syt_count(p.parts())) << p.to_string();
  }
}

TEST(MurnaghanNakayama, Examples) {
  EXPECT_EQ(mn_character(Partition({2, 1}), CycleType({3})), -1);
  EXPECT_EQ(mn_character(Partition({3, 1}), CycleType({2, 2})), -1);
  EXPECT_EQ(mn_character(Partition({1, 1, 1, 1}), CycleType({3, 1})), 1);
}

TEST(MurnaghanNakayama, MismatchedDegreesRejected) {
  EXPECT_THROW(mn_character(Partition({2, 1}), CycleType({2, 2})), std::invalid_argument);
}

TEST(MurnaghanNakayama, MatchesRimHookOracle) {
  for (int n = 1; n <= 9; ++n) {
    CharacterCache cache;
    for (const auto& lam : partitions(n)) {
      for (const auto& mu : partitions<CycleType>(n)) {
        ASSERT_EQ(cache.character(lam, mu), oracle::naive_chi(lam.parts(), mu.parts()))
            << lam.to_string() << " " << mu.to_string();
      }
    }
  }
}

TEST(MurnaghanNakayama, TableProperties) {
  for (int n = 1; n <= 12; ++n) {
    CharacterCache cache;
    const auto types = partitions<CycleType>(n);
    for (const auto& lam : partitions(n)) {
      const BigInt d = dimension(lam);
      EXPECT_EQ(cache.character(lam, CycleType::identity(n)), d);
      for (const auto& mu : types) {
        BigInt v = cache.character(lam, mu);
        EXPECT_LE(abs_big(v), d);
        if (n <= 10) {
          EXPECT_EQ(cache.character(lam.conjugate(), mu), mu.sign() * v);
        }
      }
    }
    if (n >= 2) {
      Partition standard(std::vector<int>{n - 1, 1});
      for (const auto& mu : types) EXPECT_EQ(cache.character(standard, mu), mu.count(1) - 1) << mu.to_string();
    }
  }
}

TEST(MurnaghanNakayama, AgreesWithElementwiseStandardCharacter) {
  // chi_(n-1,1)(g) = fix(g) - 1 evaluated on actual permutations.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 30);
    auto g = bridge::to_hsp(oracle::random_perm(n, rng));
    EXPECT_EQ(mn_character(Partition({n - 1, 1}), g.cycle_type()), static_cast<long>(g.fix()) - 1);
    EXPECT_EQ(mn_character(Partition::identity(n), g.cycle_type()), g.is_even() ? 1 : -1);
  }
}

TEST(MurnaghanNakayama, IntegerWidthsAgree) {
  std::mt19937_64 rng(29);
  BasicCharacterCache<__int128> small;
  BasicCharacterCache<BigInt> big;
  for (int n : {20, 30, 40, 50}) {
    auto shapes = partitions(n);
    auto types = partitions<CycleType>(n);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& lam = shapes[rng() % shapes.size()];
      const auto& mu = types[rng() % types.size()];
      EXPECT_EQ(characters::detail::to_big(small.character(lam, mu)), big.character(lam, mu));
    }
  }
}

TEST(MurnaghanNakayama, BeyondInt128Range) {
  const int n = 60;
  Partition standard(std::vector<int>{n - 1, 1});
  Partition hook(std::vector<int>{n - 2, 1, 1});
  for (const auto& mu : {CycleType({30, 20, 10}), CycleType::identity(n), CycleType({2, 2, 2, 1, 1, 1, 51})}) {
    EXPECT_EQ(mn_character(standard, mu), mu.count(1) - 1);
    // chi_(n-2,1,1) = ((fix-1)(fix-2))/2 - (number of 2-cycles)
    BigInt f = mu.count(1);
    EXPECT_EQ(mn_character(hook, mu), (f - 1) * (f - 2) / 2 - mu.count(2));
  }
  EXPECT_EQ(mn_character(Partition({30, 30}), CycleType::identity(n)), dimension(Partition({30, 30})));
}

TEST(MurnaghanNakayama, CachedValuesMatchFreshEvaluation) {
  CharacterCache shared;
  for (const auto& lam : partitions(10)) {
    for (const auto& mu : partitions<CycleType>(10)) shared.character(lam, mu);
  }
  for (const auto& lam : partitions(10)) {
    for (const auto& mu : partitions<CycleType>(10)) EXPECT_EQ(shared.character(lam, mu), mn_character(lam, mu));
  }
}

TEST(Orthogonality, SmallCases) {
  auto r1 = orthogonality_check(1);
  EXPECT_TRUE(r1.passed());
  auto r3 = orthogonality_check(3);
  EXPECT_TRUE(r3.passed());
  EXPECT_EQ(r3.classes, 3U);
}

TEST(Orthogonality, TwoTwoInnerProduct) {
  BigInt s = 0;
  for (const auto& mu : partitions<CycleType>(4)) {
    BigInt v = mn_character(Partition({2, 2}), mu);
    s += sn_class_size(mu) * v * v;
  }
  EXPECT_EQ(s, 24);
}

TEST(Orthogonality, UpToTen) {
  for (int n = 1; n <= 10; ++n) {
    auto r = orthogonality_check(n);
    EXPECT_TRUE(r.passed()) << n << ": " << r.counterexample;
  }
}
