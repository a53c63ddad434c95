#include <gtest/gtest.h>

#include "kschur/error.hpp"
#include "kschur/macdonald.hpp"
#include "kschur/oracles.hpp"
#include "kschur/verdict.hpp"
#include "kschur/sym_polynomial.hpp"
#include "test_support.hpp"

using namespace kschur;
using kschur::testing::coeff_map;
using kschur::testing::q;
using kschur::testing::schur_terms;
using kschur::testing::t;

namespace {

Filling filling(const Partition& shape, std::vector<int> entries) {
  return Filling{shape, Filling::cells_of(shape), std::move(entries)};
}

}  // namespace

TEST(Fillings, Statistics) {
  const Filling row = filling(Partition{2}, {2, 1});
  EXPECT_EQ(inv(row), 1);
  EXPECT_EQ(maj(row), 0);
  EXPECT_EQ(inv(filling(Partition{2}, {1, 2})), 0);

  const Filling col = filling(Partition{1, 1}, {1, 2});
  EXPECT_EQ(descents(col).size(), 1u);
  EXPECT_EQ(maj(col), 1);
  EXPECT_EQ(inv(col), 0);
  EXPECT_TRUE(descents(filling(Partition{1, 1}, {2, 1})).empty());
  EXPECT_TRUE(descents(filling(Partition{1, 1}, {2, 2})).empty());
}

TEST(ModifiedMacdonald, SmallShapes) {
  SymPolynomial e1(3);
  for (int i = 1; i <= 3; ++i) e1 += SymPolynomial::variable(3, i);
  EXPECT_EQ(modified_macdonald(Partition{1}, 3), e1);
  EXPECT_THROW(modified_macdonald(Partition{2, 1}, 2), DomainError);

  const SchurExpansion h2 = schur_peel(modified_macdonald(Partition{2}, 2));
  const SchurExpansion h11 = schur_peel(modified_macdonald(Partition{1, 1}, 2));
  EXPECT_EQ(h2, schur_terms(2, {{Partition{2}, 1}, {Partition{1, 1}, q()}}));
  EXPECT_EQ(h11, schur_terms(2, {{Partition{2}, 1}, {Partition{1, 1}, t()}}));
}

TEST(ModifiedMacdonald, ParallelMatchesSerial) {
  EXPECT_EQ(modified_macdonald(Partition{2, 1, 1}, 4, 1), modified_macdonald(Partition{2, 1, 1}, 4, 3));
}

TEST(ModifiedMacdonald, SymmetricAndSchurPositive) {
  for (int m = 1; m <= 4; ++m)
    for (const auto& mu : enumerate_partitions(m)) {
      const SymPolynomial h = modified_macdonald(mu, m);
      EXPECT_TRUE(is_symmetric(h)) << mu.to_string();
      EXPECT_TRUE(schur_peel(h).is_nonnegative()) << mu.to_string();
    }
}

TEST(ModifiedMacdonald, AgreesWithGramSchmidt) {
  for (int m = 1; m <= 3; ++m) {
    const auto oracle = oracle::gram_schmidt_macdonald(m, m);
    for (const auto& mu : enumerate_partitions(m)) EXPECT_EQ(modified_macdonald(mu, m), oracle.at(mu)) << mu.to_string();
  }
}

TEST(GarsiaHaiman, Fixtures) {
  EXPECT_EQ(gh_character(Partition{1}).coeffs, coeff_map({{Partition{1}, 1}}));
  EXPECT_EQ(gh_character(Partition{2, 1}).coeffs,
            coeff_map({{Partition{2, 1}, 1 + q() * t()}, {Partition{3}, q()}, {Partition{1, 1, 1}, t()}}));
  EXPECT_EQ(gh_character(Partition{1, 1, 1}).coeffs,
            coeff_map({{Partition{1, 1, 1}, 1}, {Partition{2, 1}, q(1) + q(2)}, {Partition{3}, q(3)}}));
}

TEST(GarsiaHaiman, ConventionIsSelectedByFixtures) {
  EXPECT_EQ(select_convention(), kGHConvention);
  EXPECT_EQ(convention_candidates().size(), 8u);
}

TEST(GarsiaHaiman, RegularRepresentation) {
  for (int m = 1; m <= 5; ++m)
    for (const auto& lambda : enumerate_partitions(m)) {
      const GHCharacter ch = gh_character(lambda);
      EXPECT_TRUE(ch.regular_representation_check()) << lambda.to_string();
      const SchurExpansion at_one = ch.as_expansion(m);
      SymPolynomial total(m);
      for (const auto& [mu, c] : at_one.coeffs) total += schur_monomials(mu, m).scaled(c.at_one().get_si());
      EXPECT_EQ(total, power_of_e1(m, m)) << lambda.to_string();
    }
}

TEST(GarsiaHaiman, QTKostka) {
  EXPECT_EQ(qt_kostka(Partition{2, 1}, Partition{2, 1}).specialize_q(0).specialize_t(0), QTPolynomial(1));
  for (int m = 1; m <= 4; ++m)
    for (const auto& mu : enumerate_partitions(m))
      for (const auto& lambda : enumerate_partitions(m)) {
        const QTPolynomial k = qt_kostka(lambda, mu);
        EXPECT_TRUE(k.is_nonnegative());
        EXPECT_EQ(k.at_one(), standard_tableaux(lambda));
      }
  EXPECT_THROW(qt_kostka(Partition{2}, Partition{2, 1}), DomainError);
}

TEST(GarsiaHaiman, TZeroIsKostka) {
  for (int m = 1; m <= 4; ++m)
    for (const auto& mu : enumerate_partitions(m))
      for (const auto& lambda : enumerate_partitions(m))
        EXPECT_EQ(qt_kostka(lambda, mu).specialize_t(0), kostka(lambda, mu)) << lambda.to_string() << " " << mu.to_string();
}

TEST(GarsiaHaiman, StandardTableaux) {
  EXPECT_EQ(standard_tableaux(Partition{2, 1}), 2);
  EXPECT_EQ(standard_tableaux(Partition{3, 2, 1}), 16);
  EXPECT_EQ(standard_tableaux(Partition()), 1);
}

TEST(RefinedPositivity, Examples) {
  EXPECT_EQ(refined_expansion(Partition{2, 1}, 2).coeffs, coeff_map({{Partition{2, 1}, 1}, {Partition{1, 1, 1}, t()}}));
  EXPECT_EQ(refined_expansion(Partition{1, 1, 1}, 1).coeffs, coeff_map({{Partition{1, 1, 1}, 1}}));
  EXPECT_EQ(refined_expansion(Partition{1, 1, 1}, 2).coeffs, coeff_map({{Partition{1, 1, 1}, 1}, {Partition{2, 1}, q(2)}}));
  const Verdict v = refined_positivity(Partition{2, 1}, 2);
  EXPECT_TRUE(v.nonnegative);
  EXPECT_TRUE(v.witness.is_null());
  EXPECT_THROW(refined_expansion(Partition{3}, 2), DomainError);
}

TEST(RefinedPositivity, LatexTable) {
  const GHCharacter ch = gh_character(Partition{2, 1});
  const KSchurExpansion kexp = refined_expansion(Partition{2, 1}, 2);
  const std::string tex = gh_latex(Partition{2, 1}, ch, &kexp);
  EXPECT_NE(tex.find("\\widetilde{s}_{21}"), std::string::npos);
  EXPECT_NE(tex.find("\\mathsf{GH}_{21}"), std::string::npos);
}
