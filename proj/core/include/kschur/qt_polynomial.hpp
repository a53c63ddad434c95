#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace kschur {

using BigInt = mpz_class;

/// Integer Laurent polynomial in q and t. Zero coefficients are never stored.
class QTPolynomial {
 public:
  using Exponent = std::pair<int, int>;  // (q, t)
  using Terms = std::map<Exponent, BigInt>;

  QTPolynomial() = default;
  QTPolynomial(long value);  // NOLINT(google-explicit-constructor): integer constants are polynomials
  static QTPolynomial monomial(int q_exp, int t_exp, const BigInt& coeff = 1);
  static QTPolynomial q_power(int e) { return monomial(e, 0); }
  static QTPolynomial t_power(int e) { return monomial(0, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coeff(int q_exp, int t_exp) const;

  void add_term(int q_exp, int t_exp, const BigInt& c);

  QTPolynomial& operator+=(const QTPolynomial& other);
  QTPolynomial& operator-=(const QTPolynomial& other);
  QTPolynomial& operator*=(const QTPolynomial& other);
  friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
  friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { return a -= b; }
  friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b);
  QTPolynomial operator-() const;
  friend bool operator==(const QTPolynomial&, const QTPolynomial&) = default;

  /// Multiplies by q^dq t^dt.
  QTPolynomial shifted(int dq, int dt) const;
  /// Exchanges the roles of q and t.
  QTPolynomial swap_qt() const;
  /// t^deg * f(q, 1/t).
  QTPolynomial reverse_t(int deg) const;
  /// q^deg * f(1/q, t).
  QTPolynomial reverse_q(int deg) const;
  /// Sets t = value (monomials q^a t^b become q^a value^b; value must be 0 or 1
  /// unless all t-exponents are nonnegative).
  QTPolynomial specialize_t(int value) const;
  QTPolynomial specialize_q(int value) const;
  /// Evaluation at q = t = 1.
  BigInt at_one() const;

  bool is_nonnegative() const;
  /// First term with a negative coefficient, if any.
  std::optional<std::pair<Exponent, BigInt>> first_negative() const;
  bool has_t() const;
  /// True when the polynomial is c * q^a for a single a (t-free).
  bool is_q_monomial() const;
  int max_q_degree() const;
  int min_q_degree() const;

  /// Human-readable form, e.g. "1 + q t" or "q + q^2".
  std::string to_string() const;
  /// LaTeX form with the same term ordering as to_string.
  std::string to_latex() const;

 private:
  Terms terms_;
};

}  // namespace kschur
