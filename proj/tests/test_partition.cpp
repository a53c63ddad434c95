#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "kschur/error.hpp"
#include "kschur/partition.hpp"

using namespace kschur;

TEST(Partition, NormalizesAndRejects) {
  EXPECT_EQ(Partition({3, 1, 0, 0}).parts(), (std::vector<int>{3, 1}));
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, -1}), DomainError);
  EXPECT_EQ(Partition::parse("6,5,5,3,1,1"), Partition({6, 5, 5, 3, 1, 1}));
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_THROW(Partition::parse("1,x"), DomainError);
  EXPECT_THROW(Partition::parse("1,3"), DomainError);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition{6, 1, 1}), Partition({3, 1, 1, 1, 1, 1}));
  EXPECT_EQ(conjugate(Partition{1, 1, 1}), Partition{3});
  EXPECT_EQ(conjugate(Partition{12, 6, 6, 3, 1, 1}), Partition({6, 4, 4, 3, 3, 3, 1, 1, 1, 1, 1, 1}));
  for (int m = 0; m <= 12; ++m)
    for (const auto& p : enumerate_partitions(m)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partition, Hooks) {
  EXPECT_EQ(hook(Partition{1}, 0, 0), 1);
  EXPECT_EQ(hook(Partition{2, 1}, 0, 0), 3);
  EXPECT_EQ(hook(Partition{2, 1}, 1, 0), 1);
  EXPECT_THROW(hook(Partition{2, 1}, 1, 1), DomainError);
}

TEST(Partition, Cores) {
  EXPECT_TRUE(is_r_core(Partition(), 3));
  EXPECT_TRUE(is_r_core(Partition{12, 6, 6, 3, 1, 1}, 8));
  EXPECT_FALSE(is_r_core(Partition{2, 1}, 3));
}

TEST(Partition, Statistics) {
  EXPECT_EQ(n_stat(Partition{1, 1, 1}), 0);
  EXPECT_EQ(n_stat(Partition{3}), 3);
  EXPECT_EQ(m_stat(Partition{2, 1}), 1);
  EXPECT_EQ(m_stat(Partition{1, 1, 1}), 3);
}

TEST(Partition, Dominance) {
  EXPECT_TRUE(dominance_leq(Partition{1, 1, 1}, Partition{3}));
  EXPECT_TRUE(dominance_leq(Partition{2, 1}, Partition{2, 1}));
  EXPECT_FALSE(dominance_leq(Partition{3}, Partition{2, 1}));
  EXPECT_FALSE(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
  EXPECT_FALSE(dominance_leq(Partition{4, 1, 1}, Partition{3, 3}));
  EXPECT_THROW(dominance_leq(Partition{2}, Partition{2, 1}), DomainError);
}

TEST(Partition, EnumerateKBounded) {
  EXPECT_EQ(enumerate_kbounded(3, 2), (std::vector<Partition>{Partition{2, 1}, Partition{1, 1, 1}}));
  EXPECT_EQ(enumerate_kbounded(3, 1), (std::vector<Partition>{Partition{1, 1, 1}}));
  EXPECT_EQ(enumerate_kbounded(0, 4), (std::vector<Partition>{Partition()}));
  EXPECT_EQ(enumerate_partitions(5).size(), 7u);
  EXPECT_EQ(enumerate_partitions(8).size(), 22u);
}

TEST(Partition, KConjugationExample) {
  const Partition lambda{6, 5, 5, 3, 1, 1};
  const CorePair cp = kbounded_to_core(lambda, 7);
  EXPECT_EQ(cp.core, Partition({12, 6, 6, 3, 1, 1}));
  EXPECT_EQ(cp.inner, Partition({6, 1, 1}));
  EXPECT_TRUE(check_core_pair(cp));
  EXPECT_EQ(core_to_kbounded(cp.core, 7), lambda);
  EXPECT_EQ(omega_k(lambda, 7), Partition({3, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(d_k(lambda, 7), 8);
}

TEST(Partition, SmallCores) {
  EXPECT_EQ(kbounded_to_core(Partition(), 3).core, Partition());
  EXPECT_EQ(kbounded_to_core(Partition{2, 1}, 3).core, Partition({2, 1}));
  EXPECT_EQ(kbounded_to_core(Partition{2, 1}, 3).inner, Partition());
  EXPECT_EQ(core_to_kbounded(Partition(), 3), Partition());
  EXPECT_EQ(core_to_kbounded(Partition{2, 1}, 3), Partition({2, 1}));
  EXPECT_EQ(omega_k(Partition{2, 1}, 2), Partition({1, 1, 1}));
  EXPECT_THROW(kbounded_to_core(Partition{3, 3}, 2), DomainError);
  EXPECT_THROW(core_to_kbounded(Partition{2, 1}, 2), DomainError);
}

TEST(Partition, SmallSizesConjugate) {
  for (int m = 0; m <= 6; ++m)
    for (int k = std::max(m, 1); k <= m + 2; ++k)
      for (const auto& p : enumerate_kbounded(m, k)) {
        EXPECT_EQ(omega_k(p, k), conjugate(p));
        EXPECT_EQ(d_k(p, k), 0);
      }
}

TEST(Partition, KConjugationSweep) {
  for (int m = 1; m <= 8; ++m)
    for (int k = 1; k <= m; ++k)
      for (const auto& p : enumerate_kbounded(m, k)) {
        const Partition w = omega_k(p, k);
        EXPECT_EQ(omega_k(w, k), p);
        EXPECT_EQ(d_k(w, k), d_k(p, k));
        const CorePair cp = kbounded_to_core(p, k);
        EXPECT_TRUE(check_core_pair(cp));
        EXPECT_EQ(core_to_kbounded(cp.core, k), p);
      }
}

TEST(Partition, DominanceBelowStaysBounded) {
  for (int m = 1; m <= 7; ++m)
    for (const auto& a : enumerate_partitions(m))
      for (const auto& b : enumerate_partitions(m))
        if (dominance_leq(b, a)) EXPECT_LE(b.largest(), a.largest());
}

TEST(Partition, PieriPairs) {
  const auto one = pieri_pairs(Partition{1}, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].mu, Partition());
  EXPECT_EQ(one[0].ribbons.spins, std::vector<int>{0});

  // Read off from the k-Schur expansion of e1-skewing s^{(2)}_{21}.
  const auto p21 = pieri_pairs(Partition{2, 1}, 2);
  std::map<Partition, std::vector<int>> spins;
  for (const auto& t : p21) spins[t.mu] = t.ribbons.spins;
  EXPECT_EQ(spins[Partition({2})], (std::vector<int>{0, 1}));
  EXPECT_EQ(spins[Partition({1, 1})], (std::vector<int>{0}));

  // (2) is reached from (1,1,1) although it does not fit inside it.
  const auto p111 = pieri_pairs(Partition{1, 1, 1}, 2);
  ASSERT_EQ(p111.size(), 2u);
  EXPECT_THROW(pieri_pairs(Partition(), 2), DomainError);
}

TEST(Partition, SpinRange) {
  for (int m = 1; m <= 7; ++m)
    for (int k = 1; k <= m; ++k)
      for (const auto& p : enumerate_kbounded(m, k))
        for (const auto& t : pieri_pairs(p, k)) {
          const int c = t.ribbons.ribbon_count, h = t.ribbons.common_height;
          EXPECT_EQ(static_cast<int>(t.ribbons.spins.size()), c);
          for (int s : t.ribbons.spins) {
            EXPECT_GE(s, c * (h - 1));
            EXPECT_LE(s, c * h - 1);
          }
        }
}
