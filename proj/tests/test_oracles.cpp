#include <gtest/gtest.h>

#include "kschur/demazure.hpp"
#include "kschur/error.hpp"
#include "kschur/oracles.hpp"
#include "test_support.hpp"

using namespace kschur;
using kschur::testing::q;
using kschur::testing::schur_terms;

TEST(Charge, Words) {
  EXPECT_EQ(oracle::charge({3, 2, 1}), 0);
  EXPECT_EQ(oracle::charge({1, 2, 3}), 3);
  EXPECT_EQ(oracle::charge({2, 1, 3}), 1);
  EXPECT_EQ(oracle::charge({1, 1}), 0);
  EXPECT_EQ(oracle::charge({}), 0);
  EXPECT_THROW(oracle::charge({2, 2}), DomainError);
}

TEST(Charge, Tableaux) {
  const auto tabs = oracle::enumerate_ssyt(Partition{2, 1}, {1, 1, 1});
  EXPECT_EQ(tabs.size(), 2u);
  for (const auto& tab : tabs) EXPECT_EQ(oracle::reading_word(tab).size(), 3u);
  EXPECT_EQ(oracle::enumerate_ssyt(Partition{3, 2, 1}, {1, 1, 1, 1, 1, 1}).size(), 16u);
  EXPECT_TRUE(oracle::enumerate_ssyt(Partition{1, 1}, {2}).empty());
}

TEST(Charge, KostkaPolynomials) {
  EXPECT_EQ(oracle::kostka_charge(Partition{2, 1}, Partition{2, 1}), QTPolynomial(1));
  EXPECT_EQ(oracle::kostka_charge(Partition{3}, Partition{1, 1, 1}), q(3));
  EXPECT_EQ(oracle::kostka_charge(Partition{2, 1}, Partition{1, 1, 1}), q(1) + q(2));
  EXPECT_EQ(oracle::kostka_charge(Partition{4}, Partition{2, 2}), q(2));
  EXPECT_EQ(oracle::kostka_charge(Partition{3, 1}, Partition{2, 2}), q(1));
  EXPECT_THROW(oracle::kostka_charge(Partition{3}, Partition{1}), DomainError);
}

TEST(Straighten, Examples) {
  const auto a = oracle::straighten_schur({2, 1, 0});
  EXPECT_EQ(a.sign, 1);
  EXPECT_EQ(*a.weight, (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(oracle::straighten_schur({0, 1}).sign, 0);
  EXPECT_FALSE(oracle::straighten_schur({0, 1}).weight.has_value());
  const auto b = oracle::straighten_schur({0, 2});
  EXPECT_EQ(b.sign, -1);
  EXPECT_EQ(*b.weight, (std::vector<int>{1, 1}));
  const auto c = oracle::straighten_schur({0, -1});
  EXPECT_EQ(c.sign, 1);
  EXPECT_FALSE(c.polynomial());
  const auto d = oracle::straighten_schur({1, -2});
  EXPECT_FALSE(d.polynomial());
}

TEST(RaisingSeries, Examples) {
  EXPECT_EQ(oracle::raising_series_catalan(RootIdeal::empty(3), Partition{2, 1}, 3, 4),
            schur_terms(3, {{Partition{2, 1}, 1}}));
  EXPECT_EQ(oracle::raising_series_catalan(RootIdeal::full(3), Partition{1, 1, 1}, 3, 3),
            schur_terms(3, {{Partition{1, 1, 1}, 1}, {Partition{2, 1}, q(1) + q(2)}, {Partition{3}, q(3)}}));
  EXPECT_EQ(oracle::raising_series_catalan(kschur_ideal(Partition{2, 1}, 2, 3), Partition{2, 1}, 3, 1),
            schur_terms(3, {{Partition{2, 1}, 1}, {Partition{3}, q()}}));
}

TEST(RaisingSeries, TruncationDropsHighDegrees) {
  EXPECT_EQ(oracle::raising_series_catalan(RootIdeal::full(3), Partition{1, 1, 1}, 3, 1),
            schur_terms(3, {{Partition{1, 1, 1}, 1}, {Partition{2, 1}, q(1)}}));
}

TEST(RaisingSeries, MatchesCatalanOnLargerIdeal) {
  const Partition lambda{2, 2, 1};
  const RootIdeal psi = kschur_ideal(lambda, 2, 4);
  const SchurExpansion engine = catalan_char(psi, lambda, 4);
  EXPECT_EQ(oracle::raising_series_catalan(psi, lambda, 4, d_k(lambda, 2) + 2), engine);
}

TEST(RaisingSeries, TwoByTwoAtLevelTwo) {
  const Partition lambda{2, 2};
  const SchurExpansion engine = kschur_character(lambda, 2, 3);
  EXPECT_EQ(oracle::raising_series_catalan(kschur_ideal(lambda, 2, 3), lambda, 3, d_k(lambda, 2) + 2), engine);
  EXPECT_EQ(engine.coeff(Partition{4}), q(d_k(lambda, 2)));
}

TEST(GramSchmidt, Small) {
  const auto one = oracle::gram_schmidt_macdonald(1, 3);
  SymPolynomial e1(3);
  for (int i = 1; i <= 3; ++i) e1 += SymPolynomial::variable(3, i);
  EXPECT_EQ(one.at(Partition{1}), e1);
  const auto two = oracle::gram_schmidt_macdonald(2, 2);
  EXPECT_EQ(schur_peel(two.at(Partition{2})), schur_terms(2, {{Partition{2}, 1}, {Partition{1, 1}, q()}}));
  EXPECT_THROW(oracle::gram_schmidt_macdonald(5, 5), DomainError);
}
