#pragma once

#include <map>
#include <string>
#include <vector>

#include "kschur/partition.hpp"
#include "kschur/qt_polynomial.hpp"

namespace kschur {

/// Laurent polynomial in x_1..x_n with QTPolynomial coefficients, stored as a
/// sparse map from exponent vectors. Exponents may be negative.
class SymPolynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, QTPolynomial>;

  explicit SymPolynomial(int n = 0);
  /// coeff * x^exps.
  static SymPolynomial monomial(const Exponents& exps, const QTPolynomial& coeff = 1);
  /// The variable x_i (1-based).
  static SymPolynomial variable(int n, int i);
  static SymPolynomial constant(int n, const QTPolynomial& c);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QTPolynomial coeff(const Exponents& exps) const;

  void add_term(const Exponents& exps, const QTPolynomial& c);

  SymPolynomial& operator+=(const SymPolynomial& other);
  SymPolynomial& operator-=(const SymPolynomial& other);
  friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) { return a += b; }
  friend SymPolynomial operator-(SymPolynomial a, const SymPolynomial& b) { return a -= b; }
  friend SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b);
  SymPolynomial scaled(const QTPolynomial& c) const;
  SymPolynomial operator-() const { return scaled(-1); }
  friend bool operator==(const SymPolynomial&, const SymPolynomial&) = default;

  /// Applies a coefficient map term by term.
  template <class F>
  SymPolynomial map_coefficients(F&& f) const {
    SymPolynomial out(n_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  std::string to_string() const;

 private:
  int n_ = 0;
  Terms terms_;
};

/// Sends x_i to x_{w(i)}: the exponent at position i moves to position w(i).
/// `w` is a permutation of 1..n in one-line notation.
SymPolynomial permute(const std::vector<int>& w, const SymPolynomial& f);

/// Invariance under all adjacent transpositions.
bool is_symmetric(const SymPolynomial& f);

/// Schur polynomial s_lambda(x_1..x_n) via semistandard tableaux.
SymPolynomial schur_monomials(const Partition& lambda, int n);

/// (x_1 + ... + x_n)^m.
SymPolynomial power_of_e1(int n, int m);

}  // namespace kschur
