#include "kschur/macdonald.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "kschur/error.hpp"

namespace kschur {

std::vector<Filling::Cell> Filling::cells_of(const Partition& shape) {
  std::vector<Cell> out;
  for (int y = 0; y < shape.length(); ++y)
    for (int x = 0; x < shape[static_cast<std::size_t>(y)]; ++x) out.push_back({x, y});
  return out;
}

namespace {

// Precomputed geometry of a diagram: for each cell the index of the cell
// below (or -1), its arm and leg, and the attacking pairs (a, b) with a
// before b in reading order (top row first, left to right).
struct Geometry {
  std::vector<int> below;
  std::vector<int> arm;
  std::vector<int> leg;
  std::vector<std::pair<int, int>> attacks;
};

Geometry geometry(const Partition& mu) {
  const auto cells = Filling::cells_of(mu);
  const Partition conj = conjugate(mu);
  Geometry g;
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index[{cells[i].x, cells[i].y}] = static_cast<int>(i);
  for (const auto& c : cells) {
    auto it = index.find({c.x, c.y - 1});
    g.below.push_back(it == index.end() ? -1 : it->second);
    g.arm.push_back(mu[static_cast<std::size_t>(c.y)] - c.x - 1);
    g.leg.push_back(conj[static_cast<std::size_t>(c.x)] - c.y - 1);
  }
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b) {
      const auto& u = cells[a];
      const auto& v = cells[b];
      // Same row, u left of v; or u one row above v and strictly to its right.
      if ((u.y == v.y && u.x < v.x) || (u.y == v.y + 1 && u.x > v.x))
        g.attacks.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return g;
}

std::pair<int, int> stats(const Geometry& g, const std::vector<int>& e) {
  int majv = 0, invv = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int b = g.below[i];
    if (b >= 0 && e[i] > e[static_cast<std::size_t>(b)]) {
      majv += g.leg[i] + 1;
      invv -= g.arm[i];
    }
  }
  for (const auto& [a, b] : g.attacks)
    if (e[static_cast<std::size_t>(a)] > e[static_cast<std::size_t>(b)]) ++invv;
  return {invv, majv};
}


}  // namespace

std::vector<int> descents(const Filling& f) {
  const Geometry g = geometry(f.shape);
  std::vector<int> out;
  for (std::size_t i = 0; i < f.entries.size(); ++i)
    if (g.below[i] >= 0 && f.entries[i] > f.entries[static_cast<std::size_t>(g.below[i])]) out.push_back(static_cast<int>(i));
  return out;
}

int maj(const Filling& f) { return stats(geometry(f.shape), f.entries).second; }
int inv(const Filling& f) { return stats(geometry(f.shape), f.entries).first; }

SymPolynomial modified_macdonald(const Partition& mu, int n, int jobs) {
  const int m = mu.size();
  if (n < m) throw DomainError("modified_macdonald needs at least |mu| variables");
  const Geometry g = geometry(mu);
  const auto cells = Filling::cells_of(mu);
  if (m == 0) return SymPolynomial::constant(n, 1);

  // Each worker takes the first-cell values v with v % jobs == id and keeps
  // its own accumulator; the partial sums are merged in worker order.
  jobs = std::max(1, std::min(jobs, n));
  std::vector<std::map<std::vector<int>, std::map<std::pair<int, int>, long long>>> partial(static_cast<std::size_t>(jobs));
  auto work = [&](int id) {
    auto& acc = partial[static_cast<std::size_t>(id)];
    std::vector<int> e(static_cast<std::size_t>(m), 1);
    std::vector<int> expo(static_cast<std::size_t>(n), 0);
    for (int first = 1 + id; first <= n; first += jobs) {
      std::fill(e.begin(), e.end(), 1);
      e[0] = first;
      while (true) {
        std::fill(expo.begin(), expo.end(), 0);
        for (int v : e) ++expo[static_cast<std::size_t>(v - 1)];
        ++acc[expo][stats(g, e)];
        std::size_t pos = 1;
        while (pos < e.size() && e[pos] == n) e[pos++] = 1;
        if (pos >= e.size()) break;
        ++e[pos];
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int id = 0; id < jobs; ++id) threads.emplace_back(work, id);
    for (auto& t : threads) t.join();
  }
  SymPolynomial out(n);
  for (const auto& acc : partial)
    for (const auto& [expo, by_stat] : acc) {
      QTPolynomial c;
      for (const auto& [st, count] : by_stat) c.add_term(st.first, st.second, BigInt(static_cast<long>(count)));
      out.add_term(expo, c);
    }
  return out;
}

std::string ConventionMap::describe() const {
  std::vector<std::string> steps;
  if (reverse_t) steps.push_back("t -> 1/t times t^{m_stat}");
  if (swap_qt) steps.push_back("swap q,t");
  if (conjugate_index) steps.push_back("conjugate index");
  if (steps.empty()) return "identity";
  std::string s = steps[0];
  for (std::size_t i = 1; i < steps.size(); ++i) s += ", then " + steps[i];
  return s;
}

std::vector<ConventionMap> convention_candidates() {
  std::vector<ConventionMap> out;
  for (int bits = 0; bits < 8; ++bits) out.push_back({(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0});
  return out;
}

SchurExpansion apply_convention(const ConventionMap& c, const Partition& mu, const SchurExpansion& h) {
  SchurExpansion out{h.n, {}};
  for (const auto& [lambda, coeff] : h.coeffs) {
    QTPolynomial x = coeff;
    if (c.reverse_t) x = x.reverse_t(static_cast<int>(m_stat(mu)));
    if (c.swap_qt) x = x.swap_qt();
    out.add(c.conjugate_index ? conjugate(lambda) : lambda, x);
  }
  return out;
}

namespace {

SchurExpansion reference_21() {
  SchurExpansion e{4, {}};
  e.add(Partition{2, 1}, QTPolynomial(1) + QTPolynomial::monomial(1, 1));
  e.add(Partition{3}, QTPolynomial::q_power(1));
  e.add(Partition{1, 1, 1}, QTPolynomial::t_power(1));
  return e;
}

SchurExpansion reference_111() {
  SchurExpansion e{4, {}};
  e.add(Partition{1, 1, 1}, 1);
  e.add(Partition{2, 1}, QTPolynomial::q_power(1) + QTPolynomial::q_power(2));
  e.add(Partition{3}, QTPolynomial::q_power(3));
  return e;
}

SchurExpansion macdonald_schur(const Partition& mu, int jobs) {
  const int m = mu.size();
  SchurExpansion e = schur_peel(modified_macdonald(mu, std::max(m, 1), jobs));
  e.n = default_rank(m);
  return e;
}

}  // namespace

ConventionMap select_convention() {
  const SchurExpansion h21 = macdonald_schur(Partition{2, 1}, 1);
  const SchurExpansion h111 = macdonald_schur(Partition{1, 1, 1}, 1);
  for (const auto& c : convention_candidates())
    if (apply_convention(c, Partition{2, 1}, h21) == reference_21() &&
        apply_convention(c, Partition{1, 1, 1}, h111) == reference_111())
      return c;
  throw InconsistencyError("no convention map reproduces the reference characters");
}

SchurExpansion GHCharacter::as_expansion(int n) const {
  SchurExpansion e{n, {}};
  for (const auto& [p, c] : coeffs)
    if (p.length() <= n) e.add(p, c);
  return e;
}

BigInt standard_tableaux(const Partition& lambda) {
  BigInt num = 1;
  for (int i = 2; i <= lambda.size(); ++i) num *= i;
  BigInt den = 1;
  for (int y = 0; y < lambda.length(); ++y)
    for (int x = 0; x < lambda[static_cast<std::size_t>(y)]; ++x) den *= hook(lambda, x, y);
  return num / den;
}

bool GHCharacter::regular_representation_check() const {
  BigInt total = 0;
  for (const auto& [p, c] : coeffs) total += c.at_one() * standard_tableaux(p);
  BigInt fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  return total == fact;
}

GHCharacter gh_character(const Partition& lambda, const ConventionMap& c, int jobs) {
  GHCharacter out;
  out.m = lambda.size();
  for (const auto& [p, x] : apply_convention(c, lambda, macdonald_schur(lambda, jobs)).coeffs) out.coeffs.emplace(p, x);
  return out;
}

GHCharacter gh_character(const Partition& lambda, int jobs) { return gh_character(lambda, kGHConvention, jobs); }

QTPolynomial qt_kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DomainError("qt_kostka needs partitions of equal size");
  const GHCharacter ch = gh_character(mu);
  auto it = ch.coeffs.find(lambda);
  return it == ch.coeffs.end() ? QTPolynomial() : it->second;
}

KSchurExpansion refined_expansion(const Partition& lambda, int k) {
  if (!is_kbounded(lambda, k))
    throw DomainError("partition (" + lambda.to_string() + ") is not k-bounded for k=" + std::to_string(k));
  return kschur_expand(gh_character(lambda).as_expansion(default_rank(lambda.size())), k);
}

std::string gh_latex(const Partition& lambda, const GHCharacter& ch, const KSchurExpansion* kexp) {
  std::ostringstream os;
  const std::string name = partition_latex(lambda);
  os << "\\[\n\\gch_{q,t}\\mathsf{GH}_{" << name << "} = " << ch.as_expansion(std::max(1, ch.m)).to_latex();
  if (kexp) {
    os << "\n= ";
    bool first = true;
    for (const auto& [mu, c] : kexp->coeffs) {
      if (!first) os << " + ";
      first = false;
      const std::string coef = c.to_latex();
      if (coef != "1") os << (c.term_count() == 1 ? coef : "\\left(" + coef + "\\right)") << "\\,";
      os << "\\gch\\mathsf{s}^{(" << kexp->k << ")}_{" << partition_latex(mu) << "}";
    }
  }
  os << "\n\\]\n";
  return os.str();
}

}  // namespace kschur
