#pragma once

#include <map>
#include <optional>
#include <utility>

#include "kschur/partition.hpp"
#include "kschur/qt_polynomial.hpp"
#include "kschur/schur_expansion.hpp"

namespace kschur {

/// Default number of variables for degree-m computations.
inline int default_rank(int m) { return m + 1; }

/// Coefficients in the k-Schur basis. `residual` holds whatever the
/// triangular solve could not absorb (empty when the input lies in the span).
struct KSchurExpansion {
  int k = 0;
  std::map<Partition, QTPolynomial> coeffs;
  SchurExpansion residual;

  QTPolynomial coeff(const Partition& lambda) const;
  bool is_nonnegative() const;
  /// First (partition, exponent, coefficient) with a negative coefficient.
  std::optional<std::pair<Partition, std::pair<QTPolynomial::Exponent, BigInt>>> first_negative() const;
  /// Coefficients viewed as a SchurExpansion-shaped table (for printing).
  SchurExpansion as_table(int n) const;
};

/// Character of the Hall-Littlewood module: catalan_char over all positive roots.
SchurExpansion hall_littlewood(const Partition& mu, int n);

/// K_{lambda,mu}(q): coefficient of s_lambda in hall_littlewood(mu).
/// n = 0 picks default_rank(|mu|).
QTPolynomial kostka(const Partition& lambda, const Partition& mu, int n = 0);

/// k-Schur character in n variables (n = 0 picks default_rank(|lambda|)).
/// Results are memoized; the memo is shared between threads.
SchurExpansion kschur_character(const Partition& lambda, int k, int n = 0);

/// Triangular solve of f in the k-Schur basis, eliminating from the
/// dominance-minimal end (s^{(k)}_mu = s_mu + terms above mu).
KSchurExpansion kschur_expand(const SchurExpansion& f, int k);

/// kschur_character(lambda, k) written in the (k+1)-Schur basis.
KSchurExpansion branch_k(const Partition& lambda, int k, int n = 0);

/// Product of Schur expansions, via lr_coeff.
SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b, int n);

/// s^{(k)}_lambda * s^{(l)}_mu expanded in the (k+l)-Schur basis.
KSchurExpansion product_expand(const Partition& lambda, int k, const Partition& mu, int l);

/// Coefficients of s^{(k)}_lambda(X+Y) in the basis s^{(k)}_a(X) s^{(k)}_b(Y)
/// with |a| = m1, |b| = m2.
struct CoproductExpansion {
  int k = 0;
  std::map<std::pair<Partition, Partition>, QTPolynomial> coeffs;
  /// Terms that the solve could not absorb, same indexing (Schur x Schur).
  std::map<std::pair<Partition, Partition>, QTPolynomial> residual;

  bool is_nonnegative() const;
};

CoproductExpansion coproduct_expand(const Partition& lambda, int k, int m1, int m2);

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}, by peeling s_mu s_nu.
BigInt lr_coeff(const Partition& mu, const Partition& nu, const Partition& lambda);

/// Adjoint of multiplication by e_1: each s_lambda goes to the sum of s_mu
/// over mu obtained by removing one corner.
SchurExpansion e1_skew(const SchurExpansion& f);

}  // namespace kschur
