#include "kschur/oracles.hpp"

#include <algorithm>
#include <functional>

#include "kschur/error.hpp"

namespace kschur::oracle {

namespace {

void place_letter(const Partition& shape, const std::vector<int>& content, std::size_t letter,
                  std::vector<std::vector<int>>& rows, std::vector<SSYT>& out);

// Adds `remaining` copies of `value` as a horizontal strip, deciding rows top to bottom.
void add_strip(const Partition& shape, const std::vector<int>& content, std::size_t letter, std::size_t row,
               int remaining, const std::vector<int>& before, std::vector<std::vector<int>>& rows,
               std::vector<SSYT>& out) {
  if (remaining == 0) {
    place_letter(shape, content, letter + 1, rows, out);
    return;
  }
  if (row >= static_cast<std::size_t>(shape.length())) return;
  const int cur = static_cast<int>(rows[row].size());
  // Horizontal strip: new cells of this row sit under old cells of the row above.
  const int above = row == 0 ? shape[0] : before[row - 1];
  const int room = std::min(shape[row], above) - cur;
  for (int take = std::min(room, remaining); take >= 0; --take) {
    for (int i = 0; i < take; ++i) rows[row].push_back(static_cast<int>(letter) + 1);
    add_strip(shape, content, letter, row + 1, remaining - take, before, rows, out);
    rows[row].resize(static_cast<std::size_t>(cur));
  }
}

void place_letter(const Partition& shape, const std::vector<int>& content, std::size_t letter,
                  std::vector<std::vector<int>>& rows, std::vector<SSYT>& out) {
  if (letter == content.size()) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(rows[r].size()) != shape[r]) return;
    std::vector<int> c = content;
    std::sort(c.begin(), c.end(), std::greater<>());
    out.push_back({shape, rows, Partition(c)});
    return;
  }
  std::vector<int> before;
  for (const auto& r : rows) before.push_back(static_cast<int>(r.size()));
  add_strip(shape, content, letter, 0, content[letter], before, rows, out);
}

}  // namespace

std::vector<SSYT> enumerate_ssyt(const Partition& shape, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw DomainError("negative content");
    total += c;
  }
  std::vector<SSYT> out;
  if (total != shape.size()) return out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  place_letter(shape, content, 0, rows, out);
  return out;
}

std::vector<int> reading_word(const SSYT& t) {
  std::vector<int> w;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

int charge(const std::vector<int>& word) {
  const int len = static_cast<int>(word.size());
  std::vector<bool> used(word.size(), false);
  int left = len;
  int total = 0;
  while (left > 0) {
    int pos = -1;
    for (int p = len - 1; p >= 0; --p)
      if (!used[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == 1) {
        pos = p;
        break;
      }
    if (pos < 0) throw DomainError("charge needs partition content");
    used[static_cast<std::size_t>(pos)] = true;
    --left;
    int index = 0;
    for (int letter = 2;; ++letter) {
      int found = -1;
      bool wrapped = false;
      for (int step = 1; step <= len; ++step) {
        int p = pos - step;
        if (p < 0) {
          p += len;
          wrapped = true;
        }
        if (!used[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == letter) {
          found = p;
          break;
        }
      }
      if (found < 0) break;
      if (wrapped) ++index;
      total += index;
      used[static_cast<std::size_t>(found)] = true;
      --left;
      pos = found;
    }
  }
  return total;
}

QTPolynomial kostka_charge(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DomainError("kostka_charge needs partitions of equal size");
  QTPolynomial out;
  for (const auto& t : enumerate_ssyt(lambda, mu.parts())) out.add_term(charge(reading_word(t)), 0, 1);
  return out;
}

Straightened straighten_schur(const std::vector<int>& gamma) {
  const int n = static_cast<int>(gamma.size());
  std::vector<int> g(gamma);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] += n - 1 - i;
  int swaps = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n - i; ++j) {
      if (g[static_cast<std::size_t>(j)] == g[static_cast<std::size_t>(j + 1)]) return {};
      if (g[static_cast<std::size_t>(j)] < g[static_cast<std::size_t>(j + 1)]) {
        std::swap(g[static_cast<std::size_t>(j)], g[static_cast<std::size_t>(j + 1)]);
        ++swaps;
      }
    }
  for (int i = 0; i + 1 < n; ++i)
    if (g[static_cast<std::size_t>(i)] == g[static_cast<std::size_t>(i + 1)]) return {};
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] -= n - 1 - i;
  return {swaps % 2 == 0 ? 1 : -1, g};
}

SchurExpansion raising_series_catalan(const RootIdeal& psi, const Partition& lambda, int n, int qmax) {
  if (psi.n() != n) throw DomainError("root ideal rank does not match n");
  if (lambda.length() > n) throw DomainError("partition has too many parts");
  const std::vector<RootIdeal::Root> roots(psi.pairs().begin(), psi.pairs().end());
  std::map<std::vector<int>, std::map<int, BigInt>> acc;
  std::vector<int> gamma = lambda.padded(n);
  std::function<void(std::size_t, int)> walk = [&](std::size_t idx, int used) {
    if (idx == roots.size()) {
      const Straightened s = straighten_schur(gamma);
      if (s.sign != 0) acc[*s.weight][used] += s.sign;
      return;
    }
    const auto [i, j] = roots[idx];
    for (int m = 0; used + m <= qmax; ++m) {
      walk(idx + 1, used + m);
      ++gamma[static_cast<std::size_t>(i - 1)];
      --gamma[static_cast<std::size_t>(j - 1)];
    }
    for (int m = 0; used + m <= qmax; ++m) {
      --gamma[static_cast<std::size_t>(i - 1)];
      ++gamma[static_cast<std::size_t>(j - 1)];
    }
  };
  walk(0, 0);
  SchurExpansion out{n, {}};
  for (const auto& [w, by_degree] : acc) {
    if (!w.empty() && w.back() < 0) continue;
    for (const auto& [d, c] : by_degree)
      if (c != 0) out.add(Partition(w), QTPolynomial::monomial(d, 0, c));
  }
  return out;
}

namespace {

using Rational = mpq_class;
using Matrix = std::vector<std::vector<Rational>>;

Rational power(const Rational& x, long e) {
  Rational r = 1;
  if (e < 0) return 1 / power(x, -e);
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

// Number of ways to distribute the parts of rho over positions so that position i receives lambda_i.
long long p_to_m(const std::vector<int>& rho, std::size_t idx, std::vector<int>& slack) {
  if (idx == rho.size()) {
    for (int s : slack)
      if (s != 0) return 0;
    return 1;
  }
  long long total = 0;
  for (auto& s : slack)
    if (s >= rho[idx]) {
      s -= rho[idx];
      total += p_to_m(rho, idx + 1, slack);
      s += rho[idx];
    }
  return total;
}

Rational z_factor(const Partition& rho, const Rational& q, const Rational& t) {
  Rational z = 1;
  std::map<int, int> mult;
  for (int r : rho.parts()) ++mult[r];
  for (const auto& [r, c] : mult)
    for (int i = 1; i <= c; ++i) z *= r * i;
  for (int r : rho.parts()) z *= (1 - power(q, r)) / (1 - power(t, r));
  return z;
}

Matrix invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InconsistencyError("singular matrix in the Macdonald oracle");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Coefficients c_0..c_{k-1} of the polynomial through (xs[i], ys[i]).
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Matrix v(xs.size(), std::vector<Rational>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) v[i][j] = power(xs[i], static_cast<long>(j));
  const Matrix vi = invert(v);
  std::vector<Rational> c(xs.size(), 0);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) c[i] += vi[i][j] * ys[j];
  return c;
}

struct Box {
  int arm, leg;
};

std::vector<Box> boxes(const Partition& mu) {
  const Partition conj = conjugate(mu);
  std::vector<Box> out;
  for (int r = 0; r < mu.length(); ++r)
    for (int c = 0; c < mu[static_cast<std::size_t>(r)]; ++c)
      out.push_back({mu[static_cast<std::size_t>(r)] - c - 1, conj[static_cast<std::size_t>(c)] - r - 1});
  return out;
}

// m-basis coefficients of the modified Macdonald polynomial of every mu at one point (q, t).
std::map<Partition, std::vector<Rational>> modified_at(const std::vector<Partition>& parts, const Matrix& p_in_m,
                                                        const Matrix& m_in_p, const Rational& q, const Rational& t) {
  const std::size_t np = parts.size();
  const Rational tt = 1 / t;
  std::vector<Rational> z(np);
  for (std::size_t r = 0; r < np; ++r) z[r] = z_factor(parts[r], q, tt);
  auto inner = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t r = 0; r < np; ++r) s += a[r] * b[r] * z[r];
    return s;
  };
  // parts is in decreasing lexicographic order; orthogonalize from the end (1^m first).
  std::map<Partition, std::vector<Rational>> p_coords;
  std::vector<std::vector<Rational>> done;
  for (std::size_t idx = np; idx-- > 0;) {
    std::vector<Rational> v = m_in_p[idx];
    for (const auto& u : done) {
      const Rational f = inner(m_in_p[idx], u) / inner(u, u);
      for (std::size_t r = 0; r < np; ++r) v[r] -= f * u[r];
    }
    done.push_back(v);
    p_coords[parts[idx]] = v;
  }
  std::map<Partition, std::vector<Rational>> out;
  for (std::size_t idx = 0; idx < np; ++idx) {
    const Partition& mu = parts[idx];
    Rational c = 1;
    for (const Box& b : boxes(mu)) c *= 1 - power(q, b.arm) * power(tt, b.leg + 1);
    std::vector<Rational> h(np);
    for (std::size_t r = 0; r < np; ++r) {
      Rational pleth = 1;
      for (int part : parts[r].parts()) pleth /= 1 - power(tt, part);
      // Macdonald's n(mu) = sum (i-1) mu_i, which is m_stat here.
      h[r] = p_coords[mu][r] * c * pleth * power(t, m_stat(mu));
    }
    std::vector<Rational> in_m(np, 0);
    for (std::size_t r = 0; r < np; ++r)
      for (std::size_t l = 0; l < np; ++l) in_m[l] += h[r] * p_in_m[r][l];
    out[mu] = in_m;
  }
  return out;
}

}  // namespace

std::map<Partition, SymPolynomial> gram_schmidt_macdonald(int m, int n) {
  if (m < 1 || m > 4) throw DomainError("the Gram-Schmidt oracle handles 1 <= m <= 4");
  if (n < 1) throw DomainError("need at least one variable");
  const auto parts = enumerate_partitions(m);
  const std::size_t np = parts.size();
  Matrix p_in_m(np, std::vector<Rational>(np));
  for (std::size_t r = 0; r < np; ++r)
    for (std::size_t l = 0; l < np; ++l) {
      std::vector<int> slack = parts[l].parts();
      p_in_m[r][l] = static_cast<long>(p_to_m(parts[r].parts(), 0, slack));
    }
  // m_lambda = sum_rho m_in_p[lambda][rho] p_rho.
  const Matrix m_in_p = invert(p_in_m);

  long qdeg = 0, tdeg = 0;
  for (const auto& mu : parts) {
    qdeg = std::max(qdeg, static_cast<long>(m_stat(mu)));
    tdeg = std::max(tdeg, static_cast<long>(n_stat(mu)));
  }
  static const int q_points[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  static const int t_points[] = {29, 31, 37, 41, 43, 47, 53, 59, 61};
  const std::size_t nq = static_cast<std::size_t>(qdeg) + 2, nt = static_cast<std::size_t>(tdeg) + 2;
  // values[a][b][mu][lambda]
  std::vector<std::vector<std::map<Partition, std::vector<Rational>>>> values(nq);
  for (std::size_t a = 0; a < nq; ++a)
    for (std::size_t b = 0; b < nt; ++b) values[a].push_back(modified_at(parts, p_in_m, m_in_p, q_points[a], t_points[b]));

  std::vector<Rational> qs, ts;
  for (std::size_t a = 0; a < nq; ++a) qs.emplace_back(q_points[a]);
  for (std::size_t b = 0; b < nt; ++b) ts.emplace_back(t_points[b]);

  std::map<Partition, SymPolynomial> out;
  for (const auto& mu : parts) {
    SymPolynomial poly(n);
    for (std::size_t l = 0; l < np; ++l) {
      if (parts[l].length() > n) continue;
      // Interpolate in t for each q sample, then in q for each t-degree.
      std::vector<std::vector<Rational>> by_q(nq);
      for (std::size_t a = 0; a < nq; ++a) {
        std::vector<Rational> ys;
        for (std::size_t b = 0; b < nt; ++b) ys.push_back(values[a][b][mu][l]);
        by_q[a] = interpolate(ts, ys);
      }
      QTPolynomial coeff;
      for (std::size_t j = 0; j < nt; ++j) {
        std::vector<Rational> ys;
        for (std::size_t a = 0; a < nq; ++a) ys.push_back(by_q[a][j]);
        const auto cq = interpolate(qs, ys);
        for (std::size_t i = 0; i < nq; ++i) {
          if (cq[i] == 0) continue;
          if (cq[i].get_den() != 1) throw InconsistencyError("non-integral coefficient in the Macdonald oracle");
          coeff.add_term(static_cast<int>(i), static_cast<int>(j), cq[i].get_num());
        }
      }
      if (coeff.is_zero()) continue;
      std::vector<int> e = parts[l].padded(n);
      std::sort(e.begin(), e.end());
      do {
        poly.add_term(e, coeff);
      } while (std::next_permutation(e.begin(), e.end()));
    }
    out.emplace(mu, std::move(poly));
  }
  return out;
}

}  // namespace kschur::oracle
