#pragma once

#include <map>
#include <string>
#include <vector>

#include "kschur/partition.hpp"
#include "kschur/qt_polynomial.hpp"
#include "kschur/sym_polynomial.hpp"

namespace kschur {

/// sum_lambda coeffs[lambda] * s_lambda(x_1..x_n). Iteration order is
/// lexicographic on partitions, so lower terms in dominance come first.
struct SchurExpansion {
  int n = 0;
  std::map<Partition, QTPolynomial> coeffs;

  QTPolynomial coeff(const Partition& lambda) const;
  void add(const Partition& lambda, const QTPolynomial& c);
  SchurExpansion& operator+=(const SchurExpansion& other);
  SchurExpansion& operator-=(const SchurExpansion& other);
  SchurExpansion scaled(const QTPolynomial& c) const;
  bool is_zero() const { return coeffs.empty(); }
  /// All coefficients have nonnegative integer monomial coefficients.
  bool is_nonnegative() const;
  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) { return a.coeffs == b.coeffs; }

  /// Expands back to monomials in n variables.
  SymPolynomial to_polynomial() const;

  /// "s[1,1,1] + (q + q^2) s[2,1] + q^3 s[3]"; "0" when empty.
  std::string to_text() const;
  /// Same terms with \widetilde{s}_{...} and exponent notation for repeated parts.
  std::string to_latex() const;
};

/// Number of semistandard tableaux of shape `shape` and content `content`.
BigInt kostka_number(const Partition& shape, const std::vector<int>& content);

/// Peels a symmetric polynomial into Schur polynomials: repeatedly takes the
/// dominance-maximal partition exponent and subtracts its coefficient times
/// the Schur polynomial. Only partition-shaped monomials are inspected (the
/// remaining monomials are determined by symmetry). Throws DomainError for
/// asymmetric input and for components with negative parts.
SchurExpansion schur_peel(const SymPolynomial& f);

/// Integer-coefficient variant used by the character engine: `dominant` maps
/// weakly decreasing exponent vectors (length n) to multiplicities.
std::map<std::vector<int>, BigInt> peel_dominant(std::map<std::vector<int>, BigInt> dominant, int n);

/// LaTeX name of a partition with exponent notation, e.g. "1^3" or "21".
std::string partition_latex(const Partition& lambda);

}  // namespace kschur
