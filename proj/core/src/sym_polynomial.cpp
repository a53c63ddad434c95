#include "kschur/sym_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "kschur/error.hpp"

namespace kschur {

SymPolynomial::SymPolynomial(int n) : n_(n) {
  if (n < 0) throw DomainError("negative variable count");
}

SymPolynomial SymPolynomial::monomial(const Exponents& exps, const QTPolynomial& coeff) {
  SymPolynomial p(static_cast<int>(exps.size()));
  p.add_term(exps, coeff);
  return p;
}

SymPolynomial SymPolynomial::variable(int n, int i) {
  if (i < 1 || i > n) throw DomainError("variable index out of range");
  Exponents e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(e);
}

SymPolynomial SymPolynomial::constant(int n, const QTPolynomial& c) {
  return monomial(Exponents(static_cast<std::size_t>(n), 0), c);
}

QTPolynomial SymPolynomial::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? QTPolynomial() : it->second;
}

void SymPolynomial::add_term(const Exponents& exps, const QTPolynomial& c) {
  if (static_cast<int>(exps.size()) != n_) throw DomainError("exponent vector length does not match n");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& other) {
  if (other.n_ != n_) throw DomainError("variable-count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SymPolynomial& SymPolynomial::operator-=(const SymPolynomial& other) {
  if (other.n_ != n_) throw DomainError("variable-count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b) {
  if (a.n_ != b.n_) throw DomainError("variable-count mismatch");
  SymPolynomial out(a.n_);
  SymPolynomial::Exponents e(static_cast<std::size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

SymPolynomial SymPolynomial::scaled(const QTPolynomial& c) const {
  SymPolynomial out(n_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.add_term(e, x * c);
  return out;
}

std::string SymPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.to_string() << ")*x^[";
    for (std::size_t i = 0; i < it->first.size(); ++i) os << (i ? "," : "") << it->first[i];
    os << ']';
  }
  return os.str();
}

SymPolynomial permute(const std::vector<int>& w, const SymPolynomial& f) {
  const int n = f.n();
  if (static_cast<int>(w.size()) != n) throw DomainError("permutation length does not match n");
  std::vector<int> check(w);
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n; ++i)
    if (check[static_cast<std::size_t>(i)] != i + 1) throw DomainError("not a permutation of 1..n");
  SymPolynomial out(n);
  SymPolynomial::Exponents e(static_cast<std::size_t>(n));
  for (const auto& [exps, c] : f.terms()) {
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)] = exps[static_cast<std::size_t>(i)];
    out.add_term(e, c);
  }
  return out;
}

bool is_symmetric(const SymPolynomial& f) {
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] == e[i + 1]) continue;
      auto swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      if (!(f.coeff(swapped) == c)) return false;
    }
  }
  return true;
}

namespace {

void fill_tableaux(const Partition& shape, int n, std::size_t idx,
                   const std::vector<std::pair<int, int>>& boxes, std::vector<std::vector<int>>& t,
                   std::vector<int>& weight, SymPolynomial& out) {
  if (idx == boxes.size()) {
    out.add_term(weight, 1);
    return;
  }
  const auto [r, c] = boxes[idx];
  int lo = 0;
  if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
  if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
  // The column below (r, c) still needs strictly larger values.
  int column_height = 0;
  while (column_height < shape.length() && shape[static_cast<std::size_t>(column_height)] > c) ++column_height;
  const int hi = n - (column_height - r);
  for (int v = lo; v <= hi; ++v) {
    t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    ++weight[static_cast<std::size_t>(v)];
    fill_tableaux(shape, n, idx + 1, boxes, t, weight, out);
    --weight[static_cast<std::size_t>(v)];
  }
}

}  // namespace

SymPolynomial schur_monomials(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw DomainError("partition " + lambda.to_string() + " has more than " + std::to_string(n) + " parts");
  SymPolynomial out(n);
  std::vector<std::pair<int, int>> boxes;
  std::vector<std::vector<int>> t;
  for (int r = 0; r < lambda.length(); ++r) {
    t.emplace_back(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) boxes.emplace_back(r, c);
  }
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  fill_tableaux(lambda, n, 0, boxes, t, weight, out);
  return out;
}

SymPolynomial power_of_e1(int n, int m) {
  SymPolynomial e1(n);
  for (int i = 1; i <= n; ++i) e1 += SymPolynomial::variable(n, i);
  SymPolynomial out = SymPolynomial::constant(n, 1);
  for (int i = 0; i < m; ++i) out = out * e1;
  return out;
}

}  // namespace kschur
