#include "kschur/demazure.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "kschur/error.hpp"

namespace kschur {

DemazureIndex::DemazureIndex(int i, int n) : i_(i), n_(n) {
  if (n < 1 || i < 0 || i >= n)
    throw DomainError("affine index " + std::to_string(i) + " out of range for rank " + std::to_string(n));
}

int coroot_pairing(const DemazureIndex& i, const std::vector<int>& v, int level) {
  const int n = i.rank();
  if (static_cast<int>(v.size()) != n) throw DomainError("weight length does not match rank");
  if (i.value() == 0) return level + v[static_cast<std::size_t>(n - 1)] - v[0];
  return v[static_cast<std::size_t>(i.value() - 1)] - v[static_cast<std::size_t>(i.value())];
}

AffineWeight affine_reflect(const DemazureIndex& i, const AffineWeight& w) {
  const int n = i.rank();
  const int p = coroot_pairing(i, w.v, w.level);
  AffineWeight out = w;
  if (i.value() == 0) {
    out.v[0] += p;
    out.v[static_cast<std::size_t>(n - 1)] -= p;
    out.delta -= p;
  } else {
    std::swap(out.v[static_cast<std::size_t>(i.value() - 1)], out.v[static_cast<std::size_t>(i.value())]);
  }
  return out;
}

AffineCharacter demazure_op(const DemazureIndex& i, const AffineCharacter& f) {
  const int n = f.n();
  if (i.rank() != n) throw DomainError("index rank does not match character rank");
  AffineCharacter out(n, f.level());
  const int idx = i.value();
  // Positions (0-based) that move along an alpha_i-string, and whether delta moves.
  const std::size_t up = idx == 0 ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(idx - 1);
  const std::size_t down = idx == 0 ? 0 : static_cast<std::size_t>(idx);
  const bool affine = idx == 0;
  const int level = f.level();
  // One step of "- alpha_i": coordinate `up` decreases, `down` increases.
  for (const auto& [key, mult] : f.terms()) {
    const int p = affine ? level + key.slots[up] - key.slots[down] : key.slots[up] - key.slots[down];
    AffineCharacter::Key k = key;
    if (p >= 0) {
      for (int j = 0; j <= p; ++j) {
        out.add_key(k, mult);
        --k.slots[up];
        ++k.slots[down];
        if (affine) --k.slots[kMaxRank];
      }
    } else if (p <= -2) {
      for (int j = 1; j <= -p - 1; ++j) {
        ++k.slots[up];
        --k.slots[down];
        if (affine) ++k.slots[kMaxRank];
        out.add_key(k, -mult);
      }
    }
  }
  return out;
}

CyclicInterval::CyclicInterval(int start, int length, int n) : start_(start), length_(length), n_(n) {
  if (n < 1 || start < 0 || start >= n) throw DomainError("interval start out of range");
  if (length < 0 || length >= n) throw DomainError("improper cyclic interval (length must be below n)");
}

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }
}  // namespace

CyclicInterval CyclicInterval::closed(int i, int j, int n) {
  return CyclicInterval(mod(i, n), mod(j - i, n) + 1, n);
}

CyclicInterval CyclicInterval::right_open(int i, int j, int n) {
  return CyclicInterval(mod(i, n), mod(j - i, n), n);
}

CyclicInterval CyclicInterval::left_open(int i, int j, int n) {
  return CyclicInterval(mod(i + 1, n), mod(j - i, n), n);
}

std::vector<int> CyclicInterval::indices() const {
  std::vector<int> out;
  for (int s = 0; s < length_; ++s) out.push_back((start_ + s) % n_);
  return out;
}

AffineCharacter demazure_cyclic(const CyclicInterval& interval, const AffineCharacter& f) {
  AffineCharacter cur = f;
  for (int idx : interval.indices()) cur = demazure_op(DemazureIndex(idx, f.n()), cur);
  return cur;
}

namespace {

std::vector<int> multiplicities(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw DomainError("partition " + lambda.to_string() + " has more than " + std::to_string(n) + " parts");
  const auto parts = lambda.padded(n);
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(j)] = parts[static_cast<std::size_t>(j)] - (j + 1 < n ? parts[static_cast<std::size_t>(j + 1)] : 0);
  return m;
}

}  // namespace

AffineCharacter catalan_affine_character(const RootIdeal& psi, const Partition& lambda, int n) {
  if (psi.n() != n) throw DomainError("root ideal rank does not match n");
  const auto m = multiplicities(lambda, n);
  AffineCharacter cur = AffineCharacter::trivial(n);
  for (int j = n; j >= 1; --j) {
    cur = cur.tensor_fundamental(j, m[static_cast<std::size_t>(j - 1)]);
    cur = demazure_cyclic(CyclicInterval::right_open(j % n, psi.h_col(j), n), cur);
  }
  return cur;
}

SchurExpansion catalan_char(const RootIdeal& psi, const Partition& lambda, int n) {
  const AffineCharacter ch = catalan_affine_character(psi, lambda, n);
  std::map<int, std::map<std::vector<int>, BigInt>> slices;
  for (const auto& [key, mult] : ch.terms()) {
    std::vector<int> v = ch.weight_of(key);
    if (!std::is_sorted(v.begin(), v.end(), std::greater<>())) continue;
    slices[AffineCharacter::delta_of(key)].emplace(std::move(v), BigInt(static_cast<long>(mult)));
  }
  SchurExpansion out{n, {}};
  for (auto& [delta, dominant] : slices) {
    for (const auto& [weight, c] : peel_dominant(std::move(dominant), n)) {
      if (weight.back() < 0)
        throw InconsistencyError("character of " + lambda.to_string() + " has a non-polynomial component");
      if (c < 0) throw InconsistencyError("negative multiplicity in the character of " + lambda.to_string());
      out.add(Partition(weight), QTPolynomial::monomial(kDeltaToQ * delta, 0, c));
    }
  }
  return out;
}

RootIdeal kschur_ideal(const Partition& lambda, int k, int n) { return psi_of(lambda.padded(n), k, n); }

std::vector<AffineWeight> chain_weights_by_reflection(const RootIdeal& psi, const Partition& lambda) {
  const int n = psi.n();
  const auto m = multiplicities(lambda, n);
  std::vector<AffineWeight> chain;
  AffineWeight cur{std::vector<int>(static_cast<std::size_t>(n), 0), 0, 0};
  chain.push_back(cur);
  for (int i = n; i >= 1; --i) {
    const int mi = m[static_cast<std::size_t>(i - 1)];
    for (int t = 0; t < i; ++t) cur.v[static_cast<std::size_t>(t)] += mi;
    cur.level += mi;
    for (int idx : CyclicInterval::right_open(i % n, psi.h_col(i), n).indices())
      cur = affine_reflect(DemazureIndex(idx, n), cur);
    chain.push_back(cur);
  }
  return chain;
}

std::vector<AffineWeight> chain_weights(const RootIdeal& psi, const Partition& lambda) {
  if (!psi.is_shallow()) throw DomainError("chain_weights needs a shallow root ideal");
  const int n = psi.n();
  const auto m = multiplicities(lambda, n);
  const auto tail_sum = [&](int i) {  // m^{(i)} = m_i + ... + m_n
    int s = 0;
    for (int l = i; l <= n; ++l) s += m[static_cast<std::size_t>(l - 1)];
    return s;
  };
  const auto reflected = chain_weights_by_reflection(psi, lambda);
  std::vector<AffineWeight> chain;
  std::vector<int> prev(static_cast<std::size_t>(n), 0);
  chain.push_back({prev, 0, 0});
  for (int i = n; i >= 1; --i) {
    const int h = psi.h_col(i);
    const int mi = m[static_cast<std::size_t>(i - 1)];
    std::vector<int> next(static_cast<std::size_t>(n));
    auto old = [&](int j) { return prev[static_cast<std::size_t>(j - 1)]; };
    for (int j = 1; j <= n; ++j) {
      int x = 0;
      if (h > 0) {
        if (h < j && j < i) x = old(j) + mi;
        else if (j < h) x = old(j + 1) + mi;
        else if (j == h) x = old(i) + mi + tail_sum(i);
        else if (j < n) x = old(j + 1);
        else x = old(1) - tail_sum(i + 1);
      } else {
        if (j < i) x = old(j) + mi;
        else if (j < n) x = old(j + 1);
        else x = old(i) + mi;
      }
      next[static_cast<std::size_t>(j - 1)] = x;
    }
    const AffineWeight& ref = reflected[static_cast<std::size_t>(n - i + 1)];
    if (next != ref.v)
      throw InconsistencyError("weight recurrence disagrees with reflection at stage " + std::to_string(i));
    chain.push_back({next, tail_sum(i), ref.delta});
    prev = std::move(next);
  }
  return chain;
}

bool chain_stage_is_monotone(const RootIdeal& psi, const Partition& lambda, const std::vector<AffineWeight>& chain,
                             int stage) {
  const int n = psi.n();
  if (stage < 1 || stage > n) throw DomainError("stage out of range");
  const auto& w = chain[static_cast<std::size_t>(n - stage + 1)].v;
  auto at = [&](int j) { return w[static_cast<std::size_t>(j - 1)]; };
  const int h = psi.h_col(stage);
  const int i = stage;
  if (h > 0) {
    for (int j = 1; j < h; ++j)
      if (at(j) > at(j + 1)) return false;
    for (int j = h; j + 1 <= i - 1; ++j)
      if (at(j) < at(j + 1)) return false;
    const int tail = lambda[static_cast<std::size_t>(i - 2)];  // m^{(i-1)} = lambda_{i-1}
    return at(h) <= at(i - 1) + tail;
  }
  for (int j = i; j < n; ++j)
    if (at(j) > at(j + 1)) return false;
  if (i >= 2 && at(n) > at(i - 1)) return false;
  for (int j = 1; j + 1 <= i - 1; ++j)
    if (at(j) < at(j + 1)) return false;
  return true;
}

SocleTerm socle_partition(const Partition& lambda, int k, int n) {
  if (!is_kbounded(lambda, k))
    throw DomainError("partition (" + lambda.to_string() + ") is not k-bounded for k=" + std::to_string(k));
  const SchurExpansion ch = catalan_char(kschur_ideal(lambda, k, n), lambda, n);
  int top = -1;
  for (const auto& [p, c] : ch.coeffs) top = std::max(top, c.max_q_degree());
  std::vector<Partition> carriers;
  for (const auto& [p, c] : ch.coeffs)
    if (c.max_q_degree() == top) carriers.push_back(p);
  if (carriers.size() != 1)
    throw InconsistencyError("top degree of " + lambda.to_string() + " is not carried by a single partition");
  if (!(ch.coeff(carriers.front()).coeff(top, 0) == 1))
    throw InconsistencyError("top-degree coefficient of " + lambda.to_string() + " is not 1");
  return {carriers.front(), top};
}

}  // namespace kschur
