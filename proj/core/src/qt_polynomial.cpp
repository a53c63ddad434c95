#include "kschur/qt_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "kschur/error.hpp"

namespace kschur {

QTPolynomial::QTPolynomial(long value) {
  if (value != 0) terms_.emplace(Exponent{0, 0}, BigInt(value));
}

QTPolynomial QTPolynomial::monomial(int q_exp, int t_exp, const BigInt& coeff) {
  QTPolynomial p;
  p.add_term(q_exp, t_exp, coeff);
  return p;
}

BigInt QTPolynomial::coeff(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void QTPolynomial::add_term(int q_exp, int t_exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{q_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
  return *this;
}

QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
  QTPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

QTPolynomial& QTPolynomial::operator*=(const QTPolynomial& other) { return *this = *this * other; }

QTPolynomial QTPolynomial::operator-() const {
  QTPolynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

QTPolynomial QTPolynomial::shifted(int dq, int dt) const {
  QTPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first + dq, e.second + dt}, c);
  return out;
}

QTPolynomial QTPolynomial::swap_qt() const {
  QTPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.second, e.first}, c);
  return out;
}

QTPolynomial QTPolynomial::reverse_t(int deg) const {
  QTPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first, deg - e.second}, c);
  return out;
}

QTPolynomial QTPolynomial::reverse_q(int deg) const {
  QTPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{deg - e.first, e.second}, c);
  return out;
}

namespace {

BigInt int_power(int base, int exp) {
  if (exp < 0) {
    if (base == 1) return 1;
    throw DomainError("negative exponent in integer specialization");
  }
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::abs(base)), static_cast<unsigned long>(exp));
  if (base < 0 && exp % 2 == 1) r = -r;
  return r;
}

}  // namespace

QTPolynomial QTPolynomial::specialize_t(int value) const {
  QTPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e.first, 0, c * int_power(value, e.second));
  return out;
}

QTPolynomial QTPolynomial::specialize_q(int value) const {
  QTPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(0, e.second, c * int_power(value, e.first));
  return out;
}

BigInt QTPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool QTPolynomial::is_nonnegative() const { return !first_negative().has_value(); }

std::optional<std::pair<QTPolynomial::Exponent, BigInt>> QTPolynomial::first_negative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return std::make_pair(e, c);
  return std::nullopt;
}

bool QTPolynomial::has_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.second != 0; });
}

bool QTPolynomial::is_q_monomial() const {
  return terms_.size() == 1 && terms_.begin()->first.second == 0;
}

int QTPolynomial::max_q_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  int d = terms_.begin()->first.first;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int QTPolynomial::min_q_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.begin()->first.first;
}

namespace {

// Terms ordered by total degree, then by q-degree.
std::vector<std::pair<QTPolynomial::Exponent, BigInt>> ordered_terms(const QTPolynomial::Terms& terms) {
  std::vector<std::pair<QTPolynomial::Exponent, BigInt>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  return v;
}

std::string var_power(const char* name, int e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return name;
  if (latex) return std::string(name) + "^{" + std::to_string(e) + "}";
  return std::string(name) + "^" + std::to_string(e);
}

std::string render(const QTPolynomial::Terms& terms, bool latex) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered_terms(terms)) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string q = var_power("q", e.first, latex);
    std::string t = var_power("t", e.second, latex);
    std::string mono = q;
    if (!t.empty()) mono += (mono.empty() || latex ? "" : " ") + t;
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << (latex ? "" : " ");
      os << mono;
    }
  }
  return os.str();
}

}  // namespace

std::string QTPolynomial::to_string() const { return render(terms_, false); }
std::string QTPolynomial::to_latex() const { return render(terms_, true); }

}  // namespace kschur
