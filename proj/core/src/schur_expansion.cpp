#include "kschur/schur_expansion.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <type_traits>
#include <unordered_map>

#include "kschur/error.hpp"

namespace kschur {

QTPolynomial SchurExpansion::coeff(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? QTPolynomial() : it->second;
}

void SchurExpansion::add(const Partition& lambda, const QTPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
  for (const auto& [p, c] : other.coeffs) add(p, c);
  return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& other) {
  for (const auto& [p, c] : other.coeffs) add(p, -c);
  return *this;
}

SchurExpansion SchurExpansion::scaled(const QTPolynomial& c) const {
  SchurExpansion out{n, {}};
  if (c.is_zero()) return out;
  for (const auto& [p, x] : coeffs) out.add(p, x * c);
  return out;
}

bool SchurExpansion::is_nonnegative() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second.is_nonnegative(); });
}

SymPolynomial SchurExpansion::to_polynomial() const {
  SymPolynomial out(n);
  for (const auto& [p, c] : coeffs) out += schur_monomials(p, n).scaled(c);
  return out;
}

namespace {

std::string render(const SchurExpansion& e, bool latex) {
  if (e.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : e.coeffs) {
    std::string coef = latex ? c.to_latex() : c.to_string();
    bool negative = false;
    if (c.term_count() == 1 && c.terms().begin()->second < 0) {
      negative = true;
      coef = latex ? (-c).to_latex() : (-c).to_string();
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    first = false;
    const std::string basis = latex ? "\\widetilde{s}_{" + partition_latex(p) + "}" : "s[" + p.to_string() + "]";
    if (coef == "1") {
      os << basis;
    } else if (c.term_count() == 1) {
      os << coef << (latex ? "" : " ") << basis;
    } else {
      os << (latex ? "\\left(" : "(") << coef << (latex ? "\\right)" : ") ") << basis;
    }
  }
  return os.str();
}

}  // namespace

std::string SchurExpansion::to_text() const { return render(*this, false); }
std::string SchurExpansion::to_latex() const { return render(*this, true); }

std::string partition_latex(const Partition& lambda) {
  if (lambda.empty()) return "\\emptyset";
  std::ostringstream os;
  const bool wide = lambda.largest() >= 10;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (wide && i) os << ',';
    os << parts[i];
    if (j - i > 1) os << "^{" << (j - i) << "}";
    i = j;
  }
  return os.str();
}

namespace {

struct KostkaKey {
  std::vector<int> shape;
  std::vector<int> content;
  friend bool operator==(const KostkaKey&, const KostkaKey&) = default;
};
struct KostkaKeyHash {
  std::size_t operator()(const KostkaKey& k) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : k.shape) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    h = (h ^ 0xffu) * 1099511628211ULL;
    for (int x : k.content) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

// Removes horizontal strips of size content.back() from the bottom of the
// tableau's largest entry, recursing on the remaining content.
BigInt kostka_rec(const std::vector<int>& shape, std::vector<int> content,
                  std::unordered_map<KostkaKey, BigInt, KostkaKeyHash>& memo) {
  while (!content.empty() && content.back() == 0) content.pop_back();
  int total = 0;
  for (int x : shape) total += x;
  if (content.empty()) return total == 0 ? 1 : 0;
  if (static_cast<int>(shape.size()) > static_cast<int>(content.size())) return 0;
  KostkaKey key{shape, content};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int strip = content.back();
  content.pop_back();
  BigInt count = 0;
  std::vector<int> inner(shape);
  // Choose how many boxes to remove from each row; row r may lose at most
  // shape[r] - shape[r+1] boxes (horizontal strip).
  std::function<void(std::size_t, int)> rec = [&](std::size_t row, int left) {
    if (row == shape.size()) {
      if (left == 0) {
        std::vector<int> trimmed(inner);
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        count += kostka_rec(trimmed, content, memo);
      }
      return;
    }
    const int next = row + 1 < shape.size() ? shape[row + 1] : 0;
    const int cap = std::min(left, shape[row] - next);
    for (int take = 0; take <= cap; ++take) {
      inner[row] = shape[row] - take;
      rec(row + 1, left - take);
    }
    inner[row] = shape[row];
  };
  rec(0, strip);
  memo.emplace(std::move(key), count);
  return count;
}

}  // namespace

BigInt kostka_number(const Partition& shape, const std::vector<int>& content) {
  for (int c : content)
    if (c < 0) return 0;
  int total = 0;
  for (int c : content) total += c;
  if (total != shape.size()) return 0;
  thread_local std::unordered_map<KostkaKey, BigInt, KostkaKeyHash> memo;
  if (memo.size() > 2'000'000) memo.clear();
  return kostka_rec(shape.parts(), content, memo);
}

namespace {

bool is_dominant(const std::vector<int>& e) {
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] < e[i + 1]) return false;
  return true;
}

// Partitions of m with at most n parts, dominated by `top`.
void dominated_partitions(int remaining, int cap, int n, std::vector<int>& prefix, const std::vector<int>& top,
                          std::vector<std::vector<int>>& out, int prefix_sum, int top_sum) {
  const std::size_t idx = prefix.size();
  if (remaining == 0) {
    std::vector<int> full(prefix);
    full.resize(static_cast<std::size_t>(n), 0);
    out.push_back(std::move(full));
    return;
  }
  if (static_cast<int>(idx) == n) return;
  const int top_next = top_sum + (idx < top.size() ? top[idx] : 0);
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    if (prefix_sum + part > top_next) continue;
    prefix.push_back(part);
    dominated_partitions(remaining - part, part, n, prefix, top, out, prefix_sum + part, top_next);
    prefix.pop_back();
  }
}

template <class Coeff>
std::map<std::vector<int>, Coeff> peel_impl(std::map<std::vector<int>, Coeff> dominant, int n) {
  std::map<std::vector<int>, Coeff> result;
  while (!dominant.empty()) {
    auto top_it = std::prev(dominant.end());  // lexicographically largest = dominance-maximal
    const std::vector<int> top = top_it->first;
    const Coeff c = top_it->second;
    result.emplace(top, c);
    const int shift = top.empty() ? 0 : top.back();
    std::vector<int> shape(top);
    for (int& x : shape) x -= shift;
    const Partition shape_p(shape);
    std::vector<std::vector<int>> lower;
    std::vector<int> prefix;
    dominated_partitions(shape_p.size(), shape_p.largest(), n, prefix, shape, lower, 0, 0);
    for (const auto& beta : lower) {
      const BigInt k = kostka_number(shape_p, beta);
      if (k == 0) continue;
      std::vector<int> e(beta);
      for (int& x : e) x += shift;
      auto it = dominant.find(e);
      if constexpr (std::is_same_v<Coeff, BigInt>) {
        if (it == dominant.end()) it = dominant.emplace(e, BigInt(0)).first;
        it->second -= c * k;
        if (it->second == 0) dominant.erase(it);
      } else {
        if (it == dominant.end()) it = dominant.emplace(e, QTPolynomial()).first;
        it->second -= c * QTPolynomial::monomial(0, 0, k);
        if (it->second.is_zero()) dominant.erase(it);
      }
    }
    if (dominant.count(top)) throw InconsistencyError("Schur peel did not eliminate its leading term");
  }
  return result;
}

}  // namespace

std::map<std::vector<int>, BigInt> peel_dominant(std::map<std::vector<int>, BigInt> dominant, int n) {
  for (const auto& [e, c] : dominant)
    if (static_cast<int>(e.size()) != n || !is_dominant(e)) throw DomainError("peel_dominant needs dominant exponents");
  return peel_impl(std::move(dominant), n);
}

SchurExpansion schur_peel(const SymPolynomial& f) {
  if (!is_symmetric(f)) throw DomainError("schur_peel needs a symmetric polynomial");
  std::map<std::vector<int>, QTPolynomial> dominant;
  for (const auto& [e, c] : f.terms())
    if (is_dominant(e)) dominant.emplace(e, c);
  SchurExpansion out{f.n(), {}};
  for (auto& [e, c] : peel_impl(std::move(dominant), f.n())) {
    if (!e.empty() && e.back() < 0) throw DomainError("symmetric polynomial has a non-polynomial Schur component");
    out.add(Partition(e), c);
  }
  return out;
}

}  // namespace kschur
