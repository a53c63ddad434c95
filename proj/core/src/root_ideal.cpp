#include "kschur/root_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "kschur/error.hpp"

namespace kschur {

RootIdeal::RootIdeal(int n) : n_(n) {
  if (n < 1) throw DomainError("root ideal rank must be positive");
}

RootIdeal RootIdeal::full(int n) {
  RootIdeal r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r.pairs_.insert({i, j});
  return r;
}

RootIdeal validate_root_ideal(const std::vector<RootIdeal::Root>& pairs, int n) {
  RootIdeal r(n);
  for (const auto& [i, j] : pairs) {
    if (i < 1 || j > n || i >= j)
      throw DomainError("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a positive root in rank " +
                        std::to_string(n));
    r.pairs_.insert({i, j});
  }
  for (const auto& [i, j] : r.pairs_) {
    if (i > 1 && !r.contains(i - 1, j))
      throw DomainError("closure violation: (" + std::to_string(i) + "," + std::to_string(j) + ") without (" +
                        std::to_string(i - 1) + "," + std::to_string(j) + ")");
    if (j < n && !r.contains(i, j + 1))
      throw DomainError("closure violation: (" + std::to_string(i) + "," + std::to_string(j) + ") without (" +
                        std::to_string(i) + "," + std::to_string(j + 1) + ")");
  }
  return r;
}

std::vector<RootIdeal::Root> RootIdeal::corners() const {
  std::vector<Root> out;
  for (const auto& [i, j] : pairs_)
    if (!contains(i + 1, j) && !contains(i, j - 1)) out.push_back({i, j});
  return out;
}

RootIdeal RootIdeal::remove_corner(Root corner) const {
  const auto cs = corners();
  if (std::find(cs.begin(), cs.end(), corner) == cs.end())
    throw DomainError("(" + std::to_string(corner.first) + "," + std::to_string(corner.second) + ") is not a corner");
  RootIdeal out(*this);
  out.pairs_.erase(corner);
  return out;
}

int RootIdeal::h_col(int i) const {
  if (i < 1 || i > n_) throw DomainError("column index out of range");
  int h = 0;
  for (const auto& [l, j] : pairs_)
    if (j == i) h = std::max(h, l);
  return h;
}

bool RootIdeal::is_shallow() const {
  for (const auto& [i, j] : pairs_)
    if (!contains(i, j - 1) && contains(i + 1, j)) return false;
  return true;
}

std::string RootIdeal::render() const {
  std::ostringstream os;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (j < i) os << "  ";
      else if (j == i) os << "\\ ";
      else os << (contains(i, j) ? "# " : ". ");
    }
    os << '\n';
  }
  return os.str();
}

std::string RootIdeal::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, j] : pairs_) {
    if (!first) os << ';';
    first = false;
    os << i << ',' << j;
  }
  return os.str();
}

RootIdeal parse_root_ideal(const std::string& text, int n) {
  if (text == "full") return RootIdeal::full(n);
  std::vector<RootIdeal::Root> pairs;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream ps(item);
    int i = 0, j = 0;
    char comma = 0;
    if (!(ps >> i >> comma >> j) || comma != ',') throw DomainError("cannot parse root '" + item + "'");
    std::string rest;
    if (ps >> rest) throw DomainError("cannot parse root '" + item + "'");
    pairs.push_back({i, j});
  }
  return validate_root_ideal(pairs, n);
}

RootIdeal psi_of(const std::vector<int>& weight, int k, int n) {
  if (static_cast<int>(weight.size()) != n) throw DomainError("weight length does not match n");
  for (int i = 0; i + 1 < n; ++i)
    if (weight[static_cast<std::size_t>(i + 1)] > weight[static_cast<std::size_t>(i)] + 1)
      throw DomainError("no root ideal: weight rises by more than one at position " + std::to_string(i + 1));
  std::vector<RootIdeal::Root> pairs;
  for (int i = 1; i <= n; ++i) {
    const int o = std::max(i, i + k - weight[static_cast<std::size_t>(i - 1)]);
    for (int j = std::max(o + 1, i + 1); j <= n; ++j) pairs.push_back({i, j});
  }
  return validate_root_ideal(pairs, n);
}

}  // namespace kschur
