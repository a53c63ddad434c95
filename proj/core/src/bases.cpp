#include "kschur/bases.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "kschur/demazure.hpp"
#include "kschur/error.hpp"
#include "kschur/root_ideal.hpp"

namespace kschur {

QTPolynomial KSchurExpansion::coeff(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? QTPolynomial() : it->second;
}

bool KSchurExpansion::is_nonnegative() const { return !first_negative().has_value(); }

std::optional<std::pair<Partition, std::pair<QTPolynomial::Exponent, BigInt>>> KSchurExpansion::first_negative() const {
  for (const auto& [p, c] : coeffs)
    if (auto neg = c.first_negative()) return std::make_pair(p, *neg);
  return std::nullopt;
}

SchurExpansion KSchurExpansion::as_table(int n) const {
  SchurExpansion out{n, {}};
  for (const auto& [p, c] : coeffs) out.add(p, c);
  return out;
}

namespace {

int pick_rank(int n, int m) { return n > 0 ? n : default_rank(m); }

template <class Key>
class Memo {
 public:
  template <class F>
  SchurExpansion get(const Key& key, F&& compute) {
    {
      std::lock_guard lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    SchurExpansion value = compute();
    std::lock_guard lock(mu_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, SchurExpansion> table_;
};

Memo<std::pair<Partition, int>>& hl_memo() {
  static Memo<std::pair<Partition, int>> memo;
  return memo;
}

Memo<std::tuple<Partition, int, int>>& kschur_memo() {
  static Memo<std::tuple<Partition, int, int>> memo;
  return memo;
}

Memo<std::pair<Partition, Partition>>& product_memo() {
  static Memo<std::pair<Partition, Partition>> memo;
  return memo;
}

int expansion_degree(const SchurExpansion& f) {
  int m = -1;
  for (const auto& [p, c] : f.coeffs) {
    if (m >= 0 && p.size() != m) throw DomainError("expansion is not homogeneous");
    m = p.size();
  }
  return m;
}

}  // namespace

SchurExpansion hall_littlewood(const Partition& mu, int n) {
  n = pick_rank(n, mu.size());
  return hl_memo().get({mu, n}, [&] { return catalan_char(RootIdeal::full(n), mu, n); });
}

QTPolynomial kostka(const Partition& lambda, const Partition& mu, int n) {
  if (lambda.size() != mu.size())
    throw DomainError("kostka needs partitions of equal size: " + lambda.to_string() + " vs " + mu.to_string());
  n = pick_rank(n, mu.size());
  return hall_littlewood(mu, n).coeff(lambda);
}

SchurExpansion kschur_character(const Partition& lambda, int k, int n) {
  if (!is_kbounded(lambda, k))
    throw DomainError("partition (" + lambda.to_string() + ") is not k-bounded for k=" + std::to_string(k));
  n = pick_rank(n, lambda.size());
  return kschur_memo().get({lambda, k, n}, [&] { return catalan_char(kschur_ideal(lambda, k, n), lambda, n); });
}

KSchurExpansion kschur_expand(const SchurExpansion& f, int k) {
  expansion_degree(f);
  KSchurExpansion out;
  out.k = k;
  out.residual.n = f.n;
  SchurExpansion rest = f;
  while (!rest.is_zero()) {
    // std::map order is lexicographic, so begin() is dominance-minimal among what is left.
    const Partition mu = rest.coeffs.begin()->first;
    const QTPolynomial c = rest.coeffs.begin()->second;
    if (!is_kbounded(mu, k) || mu.length() > f.n) {
      out.residual.add(mu, c);
      rest.coeffs.erase(rest.coeffs.begin());
      continue;
    }
    const SchurExpansion basis = kschur_character(mu, k, f.n);
    if (!(basis.coeff(mu) == QTPolynomial(1)) || basis.coeffs.begin()->first != mu)
      throw InconsistencyError("k-Schur character of " + mu.to_string() + " is not unitriangular");
    out.coeffs[mu] = c;
    rest -= basis.scaled(c);
    if (rest.coeffs.count(mu)) throw InconsistencyError("triangular solve left the coefficient of " + mu.to_string());
  }
  return out;
}

KSchurExpansion branch_k(const Partition& lambda, int k, int n) {
  return kschur_expand(kschur_character(lambda, k, n), k + 1);
}

namespace {

void compositions_below(const std::vector<int>& cap, std::size_t idx, int remaining, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (idx == cap.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  int rest_cap = 0;
  for (std::size_t j = idx + 1; j < cap.size(); ++j) rest_cap += cap[j];
  for (int v = std::max(0, remaining - rest_cap); v <= std::min(cap[idx], remaining); ++v) {
    cur[idx] = v;
    compositions_below(cap, idx + 1, remaining - v, cur, out);
  }
  cur[idx] = 0;
}

BigInt kostka_unsorted(const Partition& shape, std::vector<int> content) {
  std::sort(content.begin(), content.end(), std::greater<>());
  return kostka_number(shape, content);
}

// s_mu * s_nu from the dominant monomials of the product.
SchurExpansion pair_product(const Partition& mu, const Partition& nu) {
  const int n = std::max(1, mu.length() + nu.length());
  const int total = mu.size() + nu.size();
  std::map<std::vector<int>, BigInt> dominant;
  for (const Partition& gamma : enumerate_partitions(total)) {
    if (gamma.length() > n) continue;
    const auto g = gamma.padded(n);
    std::vector<std::vector<int>> alphas;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    compositions_below(g, 0, mu.size(), cur, alphas);
    BigInt sum = 0;
    for (const auto& alpha : alphas) {
      std::vector<int> beta(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) beta[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)] - alpha[static_cast<std::size_t>(i)];
      const BigInt a = kostka_unsorted(mu, alpha);
      if (a == 0) continue;
      sum += a * kostka_unsorted(nu, beta);
    }
    if (sum != 0) dominant.emplace(g, sum);
  }
  SchurExpansion out{n, {}};
  for (const auto& [e, c] : peel_dominant(std::move(dominant), n)) {
    if (c < 0) throw InconsistencyError("negative Littlewood-Richardson coefficient");
    out.add(Partition(e), QTPolynomial::monomial(0, 0, c));
  }
  return out;
}

const SchurExpansion& cached_pair_product(const Partition& a, const Partition& b, SchurExpansion& slot) {
  const auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  slot = product_memo().get(key, [&] { return pair_product(key.first, key.second); });
  return slot;
}

}  // namespace

BigInt lr_coeff(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (mu.size() + nu.size() != lambda.size()) throw DomainError("lr_coeff needs |mu| + |nu| = |lambda|");
  SchurExpansion slot;
  const auto c = cached_pair_product(mu, nu, slot).coeff(lambda);
  return c.coeff(0, 0);
}

SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b, int n) {
  SchurExpansion out{n, {}};
  SchurExpansion slot;
  for (const auto& [p, c] : a.coeffs)
    for (const auto& [r, d] : b.coeffs) {
      const QTPolynomial cd = c * d;
      for (const auto& [lambda, lr] : cached_pair_product(p, r, slot).coeffs)
        if (lambda.length() <= n) out.add(lambda, lr * cd);
    }
  return out;
}

KSchurExpansion product_expand(const Partition& lambda, int k, const Partition& mu, int l) {
  const int n = default_rank(lambda.size() + mu.size());
  const SchurExpansion prod = schur_product(kschur_character(lambda, k, n), kschur_character(mu, l, n), n);
  return kschur_expand(prod, k + l);
}

bool CoproductExpansion::is_nonnegative() const {
  if (!residual.empty()) return false;
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second.is_nonnegative(); });
}

CoproductExpansion coproduct_expand(const Partition& lambda, int k, int m1, int m2) {
  if (m1 < 0 || m2 < 0 || m1 + m2 != lambda.size())
    throw DomainError("coproduct split must satisfy m1 + m2 = |lambda|");
  const SchurExpansion f = kschur_character(lambda, k);
  const auto left = enumerate_partitions(m1);
  const auto right = enumerate_partitions(m2);
  // s_nu(X+Y) = sum c^nu_{alpha,beta} s_alpha(X) s_beta(Y); group by beta.
  std::map<Partition, SchurExpansion> by_beta;
  for (const auto& beta : right) by_beta[beta] = SchurExpansion{default_rank(m1), {}};
  for (const auto& [nu, c] : f.coeffs)
    for (const auto& alpha : left)
      for (const auto& beta : right) {
        const BigInt lr = lr_coeff(alpha, beta, nu);
        if (lr != 0) by_beta[beta].add(alpha, c * QTPolynomial::monomial(0, 0, lr));
      }
  CoproductExpansion out;
  out.k = k;
  std::map<Partition, SchurExpansion> by_a;
  for (const auto& [beta, fx] : by_beta) {
    const KSchurExpansion ex = kschur_expand(fx, k);
    for (const auto& [alpha, r] : ex.residual.coeffs) out.residual[{alpha, beta}] += r;
    for (const auto& [a, c] : ex.coeffs) {
      auto [it, fresh] = by_a.try_emplace(a, SchurExpansion{default_rank(m2), {}});
      it->second.add(beta, c);
    }
  }
  for (const auto& [a, gy] : by_a) {
    const KSchurExpansion ex = kschur_expand(gy, k);
    for (const auto& [beta, r] : ex.residual.coeffs) out.residual[{a, beta}] += r;
    for (const auto& [b, c] : ex.coeffs) out.coeffs[{a, b}] = c;
  }
  return out;
}

SchurExpansion e1_skew(const SchurExpansion& f) {
  SchurExpansion out{f.n, {}};
  for (const auto& [lambda, c] : f.coeffs) {
    if (lambda.empty()) throw DomainError("e1_skew of a constant");
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
      std::vector<int> mu = parts;
      --mu[i];
      out.add(Partition(mu), c);
    }
  }
  return out;
}

}  // namespace kschur
