#include <gtest/gtest.h>

#include "kschur/affine_character.hpp"
#include "kschur/error.hpp"
#include "kschur/schur_expansion.hpp"
#include "kschur/sym_polynomial.hpp"

using namespace kschur;

TEST(QTPolynomial, Arithmetic) {
  const QTPolynomial q = QTPolynomial::q_power(1), t = QTPolynomial::t_power(1);
  const QTPolynomial f = q + t * 2 + 1;
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ((q + t) * (q + t), q * q + q * t * 2 + t * t);
  EXPECT_EQ(f.coeff(0, 1), 2);
  EXPECT_EQ(f.at_one(), 4);
  EXPECT_EQ(f.swap_qt(), t + q * 2 + 1);
  EXPECT_EQ((q * t + 1).reverse_t(1), q + t);
  EXPECT_EQ(f.specialize_t(0), q + 1);
  EXPECT_TRUE(f.is_nonnegative());
  EXPECT_FALSE((q - t).is_nonnegative());
  EXPECT_EQ((q + q * q).to_string(), "q + q^2");
  EXPECT_EQ((q * t + 1).to_string(), "1 + q t");
}

TEST(QTPolynomial, BigCoefficients) {
  QTPolynomial f = QTPolynomial::monomial(0, 0, BigInt("1000000000000000000000"));
  f *= f;
  EXPECT_EQ(f.coeff(0, 0), BigInt("1000000000000000000000000000000000000000000"));
}

TEST(SymPolynomial, Products) {
  const SymPolynomial x1 = SymPolynomial::variable(2, 1), x2 = SymPolynomial::variable(2, 2);
  const SymPolynomial s = x1 + x2;
  SymPolynomial expect(2);
  expect.add_term({2, 0}, 1);
  expect.add_term({1, 1}, 2);
  expect.add_term({0, 2}, 1);
  EXPECT_EQ(s * s, expect);
  EXPECT_THROW(SymPolynomial::variable(2, 1) * SymPolynomial::variable(3, 1), DomainError);
}

TEST(SymPolynomial, Symmetry) {
  SymPolynomial f = SymPolynomial::variable(3, 1) + SymPolynomial::variable(3, 2) + SymPolynomial::variable(3, 3);
  EXPECT_TRUE(is_symmetric(f));
  EXPECT_EQ(permute({1, 2, 3}, f), f);
  EXPECT_FALSE(is_symmetric(SymPolynomial::monomial({2, 1})));
  const SymPolynomial g = SymPolynomial::monomial({2, 1, 0});
  EXPECT_EQ(permute({2, 1, 3}, g), SymPolynomial::monomial({1, 2, 0}));
}

TEST(SymPolynomial, SchurPolynomials) {
  SymPolynomial e1(3);
  for (int i = 1; i <= 3; ++i) e1 += SymPolynomial::variable(3, i);
  EXPECT_EQ(schur_monomials(Partition{1}, 3), e1);
  EXPECT_EQ(schur_monomials(Partition{1, 1, 1}, 3), SymPolynomial::monomial({1, 1, 1}));
  EXPECT_EQ(schur_monomials(Partition{2, 1}, 2), SymPolynomial::monomial({2, 1}) + SymPolynomial::monomial({1, 2}));
  EXPECT_THROW(schur_monomials(Partition{1, 1, 1}, 2), DomainError);
}

TEST(SchurPeel, Basics) {
  EXPECT_TRUE(schur_peel(SymPolynomial(3)).is_zero());
  const SchurExpansion s21 = schur_peel(schur_monomials(Partition{2, 1}, 3));
  EXPECT_EQ(s21.coeffs.size(), 1u);
  EXPECT_EQ(s21.coeff(Partition{2, 1}), QTPolynomial(1));
  const SymPolynomial sq = power_of_e1(2, 2);
  const SchurExpansion e = schur_peel(sq);
  EXPECT_EQ(e.coeff(Partition{2}), QTPolynomial(1));
  EXPECT_EQ(e.coeff(Partition{1, 1}), QTPolynomial(1));
  EXPECT_EQ(e.to_text(), "s[1,1] + s[2]");
  EXPECT_THROW(schur_peel(SymPolynomial::monomial({1, 0})), DomainError);
}

TEST(SchurPeel, SchurProduct) {
  const SymPolynomial p = schur_monomials(Partition{1}, 2) * schur_monomials(Partition{1}, 2);
  EXPECT_TRUE(is_symmetric(p));
  EXPECT_EQ(schur_peel(p).to_text(), "s[1,1] + s[2]");
}

TEST(SchurExpansion, Rendering) {
  SchurExpansion e{3, {}};
  e.add(Partition{1, 1, 1}, 1);
  e.add(Partition{2, 1}, QTPolynomial::q_power(1) + QTPolynomial::q_power(2));
  e.add(Partition{3}, QTPolynomial::q_power(3));
  EXPECT_EQ(e.to_text(), "s[1,1,1] + (q + q^2) s[2,1] + q^3 s[3]");
  EXPECT_EQ(e.to_latex(), "\\widetilde{s}_{1^{3}} + \\left(q + q^{2}\\right)\\widetilde{s}_{21} + q^{3}\\widetilde{s}_{3}");
  EXPECT_EQ(schur_peel(e.to_polynomial()), e);
}

TEST(KostkaNumbers, Small) {
  EXPECT_EQ(kostka_number(Partition{2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(kostka_number(Partition{3, 2, 1}, {1, 1, 1, 1, 1, 1}), 16);
  EXPECT_EQ(kostka_number(Partition{2, 2}, {2, 1, 1}), 1);
  EXPECT_EQ(kostka_number(Partition{2}, {0, 2}), 1);
}

TEST(AffineCharacter, Basics) {
  AffineCharacter c = AffineCharacter::trivial(3);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.multiplicity({0, 0, 0}, 0), 1);
  const AffineCharacter d = c.tensor_fundamental(2, 3);
  EXPECT_EQ(d.level(), 3);
  EXPECT_EQ(d.multiplicity({3, 3, 0}, 0), 1);
  AffineCharacter e(2, 0);
  e.add({1, 0}, -2, 5);
  e.add({1, 0}, -2, -5);
  EXPECT_TRUE(e.is_zero());
  EXPECT_THROW(AffineCharacter(kMaxRank + 1, 0), DomainError);
}

TEST(AffineCharacter, OverflowIsReported) {
  AffineCharacter e(2, 0);
  e.add({0, 0}, 0, INT64_MAX);
  EXPECT_THROW(e.add({0, 0}, 0, 1), InconsistencyError);
}
