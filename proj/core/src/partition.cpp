#include "kschur/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "kschur/error.hpp"

namespace kschur {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int n) const {
  if (n < length()) throw DomainError("partition longer than the requested padding");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (text.find_first_not_of(" \t,") == std::string::npos) continue;
      throw DomainError("empty part in partition '" + text + "'");
    }
    auto last = token.find_last_not_of(" \t");
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw DomainError("invalid part '" + token + "'");
    }
    if (used != token.size()) throw DomainError("invalid part '" + token + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other[i] > (*this)[i]) return false;
  return true;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int part : lambda.parts())
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

int hook(const Partition& lambda, int x, int y) {
  if (x < 0 || y < 0 || x >= lambda[static_cast<std::size_t>(y)])
    throw DomainError("(" + std::to_string(x) + "," + std::to_string(y) + ") is not a box");
  int leg = 0;
  for (int j = y + 1; j < lambda.length() && lambda[static_cast<std::size_t>(j)] > x; ++j) ++leg;
  return lambda[static_cast<std::size_t>(y)] - x + leg;
}

bool is_r_core(const Partition& lambda, int r) {
  if (r < 1) throw DomainError("core parameter must be positive");
  const Partition conj = conjugate(lambda);
  for (int y = 0; y < lambda.length(); ++y)
    for (int x = 0; x < lambda[static_cast<std::size_t>(y)]; ++x)
      if (lambda[static_cast<std::size_t>(y)] - x + conj[static_cast<std::size_t>(x)] - y - 1 == r)
        return false;
  return true;
}

long long n_stat(const Partition& lambda) {
  long long total = 0;
  for (int part : lambda.parts()) total += static_cast<long long>(part) * (part - 1) / 2;
  return total;
}

long long m_stat(const Partition& lambda) { return n_stat(conjugate(lambda)); }

bool dominates(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  int a = 0, b = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    a += lambda[static_cast<std::size_t>(i)];
    b += mu[static_cast<std::size_t>(i)];
    if (a > b) return false;
  }
  return true;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DomainError("dominance needs partitions of equal size");
  return dominates(mu, lambda);
}

namespace {

void generate(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_kbounded(int m, int k) {
  if (m < 0 || k < 0) throw DomainError("enumerate_kbounded needs m, k >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (m > 0 && k == 0) return out;
  generate(m, k, prefix, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int m) { return enumerate_kbounded(m, m); }

bool is_kbounded(const Partition& lambda, int k) { return lambda.largest() <= k; }

bool check_core_pair(const CorePair& pair) {
  const int k = pair.bound;
  if (!is_r_core(pair.core, k + 1)) return false;
  if (!pair.core.contains(pair.inner)) return false;
  const Partition conj = conjugate(pair.core);
  for (int y = 0; y < pair.core.length(); ++y) {
    for (int x = 0; x < pair.core[static_cast<std::size_t>(y)]; ++x) {
      const int h = pair.core[static_cast<std::size_t>(y)] - x + conj[static_cast<std::size_t>(x)] - y - 1;
      const bool in_inner = x < pair.inner[static_cast<std::size_t>(y)];
      if (in_inner != (h > k + 1)) return false;
    }
  }
  return true;
}

CorePair kbounded_to_core(const Partition& lambda, int k) {
  if (k < 0 || !is_kbounded(lambda, k))
    throw DomainError("partition (" + lambda.to_string() + ") is not k-bounded for k=" + std::to_string(k));
  const int len = lambda.length();
  std::vector<int> core(static_cast<std::size_t>(len), 0), inner(static_cast<std::size_t>(len), 0);
  // Rows are placed bottom-up; each row slides right until its leftmost box
  // has hook length at most k within the skew shape built so far.
  for (int i = len - 1; i >= 0; --i) {
    const int row = lambda[static_cast<std::size_t>(i)];
    int shift = (i + 1 < len) ? inner[static_cast<std::size_t>(i + 1)] : 0;
    for (;; ++shift) {
      int leg = 0;
      for (int j = i + 1; j < len && core[static_cast<std::size_t>(j)] > shift; ++j) ++leg;
      if (row + leg <= k) break;
    }
    inner[static_cast<std::size_t>(i)] = shift;
    core[static_cast<std::size_t>(i)] = shift + row;
  }
  CorePair pair{Partition(core), Partition(inner), k};
  if (!check_core_pair(pair))
    throw InconsistencyError("core construction failed its hook characterization for " + lambda.to_string());
  return pair;
}

Partition core_to_kbounded(const Partition& gamma, int k) {
  if (k < 0 || !is_r_core(gamma, k + 1))
    throw DomainError("partition " + gamma.to_string() + " is not a " + std::to_string(k + 1) + "-core");
  const Partition conj = conjugate(gamma);
  std::vector<int> out;
  for (int y = 0; y < gamma.length(); ++y) {
    int big = 0;
    for (int x = 0; x < gamma[static_cast<std::size_t>(y)]; ++x)
      if (gamma[static_cast<std::size_t>(y)] - x + conj[static_cast<std::size_t>(x)] - y - 1 > k + 1) ++big;
    out.push_back(gamma[static_cast<std::size_t>(y)] - big);
  }
  return Partition(std::move(out));
}

Partition omega_k(const Partition& lambda, int k) {
  const CorePair pair = kbounded_to_core(lambda, k);
  const Partition core_conj = conjugate(pair.core);
  const Partition inner_conj = conjugate(pair.inner);
  std::vector<int> out;
  for (int i = 0; i < core_conj.length(); ++i)
    out.push_back(core_conj[static_cast<std::size_t>(i)] - inner_conj[static_cast<std::size_t>(i)]);
  std::vector<int> sorted(out);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (sorted != out) throw InconsistencyError("k-conjugate is not a partition for " + lambda.to_string());
  return Partition(std::move(out));
}

int d_k(const Partition& lambda, int k) { return kbounded_to_core(lambda, k).inner.size(); }

namespace {

using Cell = std::pair<int, int>;  // (x, y)

std::vector<std::vector<Cell>> connected_components(const std::set<Cell>& cells) {
  std::vector<std::vector<Cell>> components;
  std::set<Cell> seen;
  for (const Cell& start : cells) {
    if (seen.count(start)) continue;
    std::vector<Cell> component;
    std::vector<Cell> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      component.push_back(c);
      const Cell nbrs[] = {{c.first + 1, c.second}, {c.first - 1, c.second}, {c.first, c.second + 1}, {c.first, c.second - 1}};
      for (const Cell& nb : nbrs)
        if (cells.count(nb) && !seen.count(nb)) {
          seen.insert(nb);
          stack.push_back(nb);
        }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_ribbon(const std::vector<Cell>& cells) {
  std::set<Cell> s(cells.begin(), cells.end());
  for (const Cell& c : cells)
    if (s.count({c.first + 1, c.second}) && s.count({c.first, c.second + 1}) && s.count({c.first + 1, c.second + 1}))
      return false;
  return true;
}

std::vector<Cell> normalized(const std::vector<Cell>& cells) {
  int min_x = cells.front().first, min_y = cells.front().second;
  for (const Cell& c : cells) {
    min_x = std::min(min_x, c.first);
    min_y = std::min(min_y, c.second);
  }
  std::vector<Cell> out;
  for (const Cell& c : cells) out.emplace_back(c.first - min_x, c.second - min_y);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PieriTerm> pieri_pairs(const Partition& lambda, int k) {
  if (!is_kbounded(lambda, k))
    throw DomainError("partition (" + lambda.to_string() + ") is not k-bounded for k=" + std::to_string(k));
  if (lambda.size() < 1) throw DomainError("pieri_pairs needs a nonempty partition");
  const Partition big = kbounded_to_core(lambda, k).core;
  std::vector<PieriTerm> out;
  for (const Partition& mu : enumerate_kbounded(lambda.size() - 1, k)) {
    const Partition small = kbounded_to_core(mu, k).core;
    if (!big.contains(small)) continue;
    int row = -1;
    if (lambda.contains(mu))
      for (int y = 0; y < lambda.length() && row < 0; ++y)
        if (mu[static_cast<std::size_t>(y)] != lambda[static_cast<std::size_t>(y)]) row = y;

    std::set<Cell> skew;
    for (int y = 0; y < big.length(); ++y)
      for (int x = small[static_cast<std::size_t>(y)]; x < big[static_cast<std::size_t>(y)]; ++x) skew.insert({x, y});
    auto ribbons = connected_components(skew);
    const auto shape = normalized(ribbons.front());
    int height = 0;
    {
      std::set<int> rows;
      for (const Cell& c : ribbons.front()) rows.insert(c.second);
      height = static_cast<int>(rows.size());
    }
    for (const auto& ribbon : ribbons)
      if (!is_ribbon(ribbon) || normalized(ribbon) != shape)
        throw InconsistencyError("core(" + lambda.to_string() + ")/core(" + mu.to_string() +
                                 ") is not a union of translated ribbons");
    // Sort ribbons bottom to top: larger row index is lower in English notation.
    std::sort(ribbons.begin(), ribbons.end(), [](const auto& a, const auto& b) {
      return a.front().second > b.front().second;
    });
    RibbonData data;
    data.removed_row = row;
    data.ribbon_count = static_cast<int>(ribbons.size());
    data.common_height = height;
    for (int marked = 0; marked < data.ribbon_count; ++marked) {
      const int above = data.ribbon_count - 1 - marked;
      data.spins.push_back(data.ribbon_count * (height - 1) + above);
    }
    std::sort(data.spins.begin(), data.spins.end());
    out.push_back({mu, std::move(data)});
  }
  return out;
}

}  // namespace kschur
