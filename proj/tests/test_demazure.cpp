#include <gtest/gtest.h>

#include "kschur/demazure.hpp"
#include "kschur/error.hpp"
#include "test_support.hpp"

using namespace kschur;
using kschur::testing::q;
using kschur::testing::schur_terms;
using kschur::testing::seven_schur_ideal;

TEST(RootIdeal, Validation) {
  EXPECT_EQ(validate_root_ideal({}, 4).size(), 0u);
  EXPECT_EQ(validate_root_ideal({{1, 2}, {1, 3}, {2, 3}}, 3), RootIdeal::full(3));
  EXPECT_EQ(seven_schur_ideal().size(), 7u);
  EXPECT_THROW(validate_root_ideal({{2, 3}}, 3), DomainError);
  EXPECT_THROW(validate_root_ideal({{1, 2}}, 3), DomainError);
  EXPECT_THROW(validate_root_ideal({{2, 2}}, 3), DomainError);
  EXPECT_THROW(validate_root_ideal({{1, 4}}, 3), DomainError);
}

TEST(RootIdeal, Parse) {
  EXPECT_EQ(parse_root_ideal("", 3), RootIdeal::empty(3));
  EXPECT_EQ(parse_root_ideal("full", 3), RootIdeal::full(3));
  EXPECT_EQ(parse_root_ideal("1,3;1,4;1,5;1,6;2,5;2,6;3,6", 6), seven_schur_ideal());
  EXPECT_THROW(parse_root_ideal("1-3", 3), DomainError);
}

TEST(RootIdeal, Corners) {
  EXPECT_EQ(RootIdeal::full(2).corners(), (std::vector<RootIdeal::Root>{{1, 2}}));
  EXPECT_EQ(RootIdeal::full(2).remove_corner({1, 2}), RootIdeal::empty(2));
  const auto corners = seven_schur_ideal().corners();
  for (const RootIdeal::Root c : {RootIdeal::Root{3, 6}, RootIdeal::Root{2, 5}, RootIdeal::Root{1, 3}})
    EXPECT_NE(std::find(corners.begin(), corners.end(), c), corners.end());
  EXPECT_THROW(RootIdeal::full(3).remove_corner({1, 3}), DomainError);
  for (const auto& c : corners) EXPECT_EQ(seven_schur_ideal().remove_corner(c).size(), 6u);
}

TEST(RootIdeal, HCol) {
  for (int i = 1; i <= 5; ++i) EXPECT_EQ(RootIdeal::empty(5).h_col(i), 0);
  for (int i = 1; i <= 5; ++i) EXPECT_EQ(RootIdeal::full(5).h_col(i), i - 1);
  std::vector<int> h;
  for (int i = 1; i <= 6; ++i) h.push_back(seven_schur_ideal().h_col(i));
  EXPECT_EQ(h, (std::vector<int>{0, 0, 1, 1, 2, 3}));
}

TEST(RootIdeal, Shallow) {
  EXPECT_TRUE(RootIdeal::empty(4).is_shallow());
  EXPECT_TRUE(seven_schur_ideal().is_shallow());
  EXPECT_TRUE(validate_root_ideal({{1, 3}}, 3).is_shallow());
  EXPECT_TRUE(RootIdeal::full(3).is_shallow());
  EXPECT_FALSE(validate_root_ideal({{1, 3}, {2, 3}, {1, 4}, {2, 4}}, 4).is_shallow());
}

TEST(RootIdeal, PsiOf) {
  EXPECT_EQ(psi_of({6, 5, 5, 3, 1, 1}, 7, 6), seven_schur_ideal());
  EXPECT_EQ(kschur_ideal(Partition{6, 5, 5, 3, 1, 1}, 7, 6), seven_schur_ideal());
  for (const auto& p : enumerate_partitions(4)) EXPECT_EQ(psi_of(p.padded(5), 0, 5), RootIdeal::full(5));
  EXPECT_EQ(psi_of({0, 0, 0, 0}, 3, 4), RootIdeal::empty(4));
  EXPECT_THROW(psi_of({0, 2}, 1, 2), DomainError);
}

TEST(RootIdeal, Render) {
  EXPECT_EQ(RootIdeal::full(2).render(), "\\ # \n  \\ \n");
}

TEST(Demazure, Reflections) {
  const DemazureIndex i1(1, 3), i0(0, 2);
  EXPECT_EQ(affine_reflect(i1, AffineWeight{{0, 0, 0}, 0, 0}), (AffineWeight{{0, 0, 0}, 0, 0}));
  EXPECT_EQ(affine_reflect(i1, AffineWeight{{2, 1, 0}, 1, 0}), (AffineWeight{{1, 2, 0}, 1, 0}));
  EXPECT_EQ(affine_reflect(i0, AffineWeight{{0, 0}, 1, 0}), (AffineWeight{{1, -1}, 1, -1}));
  EXPECT_EQ(coroot_pairing(i0, {0, 0}, 1), 1);
  EXPECT_THROW(DemazureIndex(3, 3), DomainError);
  EXPECT_THROW(DemazureIndex(-1, 3), DomainError);
}

TEST(Demazure, Operators) {
  const AffineCharacter triv = AffineCharacter::trivial(3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(demazure_op(DemazureIndex(i, 3), triv), triv);

  AffineCharacter f(2, 0);
  f.add({1, 0}, 0, 1);
  AffineCharacter expect(2, 0);
  expect.add({1, 0}, 0, 1);
  expect.add({0, 1}, 0, 1);
  EXPECT_EQ(demazure_op(DemazureIndex(1, 2), f), expect);

  AffineCharacter g(2, 0);
  g.add({0, 1}, 0, 1);
  EXPECT_TRUE(demazure_op(DemazureIndex(1, 2), g).is_zero());  // pairing -1
  AffineCharacter r(2, 0);
  r.add({0, 3}, 0, 1);  // pairing -3
  AffineCharacter r_expect(2, 0);
  r_expect.add({1, 2}, 0, -1);
  r_expect.add({2, 1}, 0, -1);
  EXPECT_EQ(demazure_op(DemazureIndex(1, 2), r), r_expect);
}

TEST(Demazure, CyclicIntervals) {
  EXPECT_EQ(CyclicInterval::right_open(2, 2, 4).length(), 0);
  EXPECT_EQ(CyclicInterval::left_open(1, 1, 4).length(), 0);
  EXPECT_EQ(CyclicInterval::closed(3, 1, 4).indices(), (std::vector<int>{3, 0, 1}));
  EXPECT_EQ(CyclicInterval::right_open(2, 0, 4).indices(), (std::vector<int>{2, 3}));
  EXPECT_EQ(CyclicInterval::left_open(2, 1, 4).indices(), (std::vector<int>{3, 0, 1}));
  AffineCharacter f = AffineCharacter::trivial(3).tensor_fundamental(1, 2);
  EXPECT_EQ(demazure_cyclic(CyclicInterval::right_open(1, 1, 3), f), f);
  const AffineCharacter step = demazure_op(DemazureIndex(2, 3), demazure_op(DemazureIndex(1, 3), f));
  EXPECT_EQ(demazure_cyclic(CyclicInterval::right_open(1, 0, 3), f), step);
}

TEST(Catalan, EmptyIdealGivesSchur) {
  EXPECT_EQ(catalan_char(RootIdeal::empty(3), Partition{2, 1}, 3), schur_terms(3, {{Partition{2, 1}, 1}}));
  EXPECT_EQ(catalan_char(RootIdeal::empty(4), Partition{3, 1}, 4), schur_terms(4, {{Partition{3, 1}, 1}}));
}

TEST(Catalan, KostkaTableAtRankThree) {
  const RootIdeal full = RootIdeal::full(3);
  EXPECT_EQ(catalan_char(full, Partition{1, 1, 1}, 3),
            schur_terms(3, {{Partition{1, 1, 1}, 1}, {Partition{2, 1}, q(1) + q(2)}, {Partition{3}, q(3)}}));
  EXPECT_EQ(catalan_char(full, Partition{2, 1}, 3), schur_terms(3, {{Partition{2, 1}, 1}, {Partition{3}, q(1)}}));
  EXPECT_EQ(catalan_char(full, Partition{3}, 3), schur_terms(3, {{Partition{3}, 1}}));
}

TEST(Catalan, KSchurIdeal) {
  EXPECT_EQ(catalan_char(kschur_ideal(Partition{2, 1}, 2, 3), Partition{2, 1}, 3),
            schur_terms(3, {{Partition{2, 1}, 1}, {Partition{3}, q(1)}}));
  EXPECT_THROW(catalan_char(RootIdeal::full(2), Partition{1, 1, 1}, 2), DomainError);
}

TEST(Catalan, SevenSchurExample) {
  const Partition lambda{6, 5, 5, 3, 1, 1};
  const SchurExpansion e = catalan_char(seven_schur_ideal(), lambda, 6);
  EXPECT_TRUE(e.is_nonnegative());
  EXPECT_EQ(e.coeff(lambda), QTPolynomial(1));
  EXPECT_EQ(e, kschur_character(lambda, 7, 6));
}

TEST(ChainWeights, SevenSchurExample) {
  const Partition lambda{6, 5, 5, 3, 1, 1};
  const auto chain = chain_weights(seven_schur_ideal(), lambda);
  ASSERT_EQ(chain.size(), 7u);
  // chain[0] is the start of the recursion, chain[i] the weight after stage n+1-i.
  EXPECT_EQ(chain[6].v, (std::vector<int>{0, 0, 0, 3, 6, 12}));
  EXPECT_EQ(chain[6].level, 6);
  EXPECT_EQ(chain[3].v, (std::vector<int>{6, 4, 4, 0, 0, 0}));
  EXPECT_EQ(chain[3].level, 3);
  EXPECT_EQ(chain, chain_weights_by_reflection(seven_schur_ideal(), lambda));
  for (int stage = 1; stage <= 6; ++stage) EXPECT_TRUE(chain_stage_is_monotone(seven_schur_ideal(), lambda, chain, stage));
}

TEST(ChainWeights, EmptyPartition) {
  for (const auto& w : chain_weights(RootIdeal::empty(3), Partition())) {
    EXPECT_EQ(w.v, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(w.level, 0);
  }
  EXPECT_THROW(chain_weights(validate_root_ideal({{1, 3}, {2, 3}, {1, 4}, {2, 4}}, 4), Partition{1}), DomainError);
}

TEST(Socle, Examples) {
  const SocleTerm s = socle_partition(Partition{2, 1}, 2, 4);
  EXPECT_EQ(s.partition, Partition{3});
  EXPECT_EQ(s.degree, 1);
  const SocleTerm small = socle_partition(Partition{2, 1}, 3, 4);
  EXPECT_EQ(small.partition, Partition({2, 1}));
  EXPECT_EQ(small.degree, 0);
  const SocleTerm big = socle_partition(Partition{6, 5, 5, 3, 1, 1}, 7, 6);
  EXPECT_EQ(big.partition, Partition({12, 6, 3}));
  EXPECT_EQ(big.degree, 8);
}
