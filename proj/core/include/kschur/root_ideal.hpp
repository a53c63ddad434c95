#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kschur {

/// Upward-closed set of positive roots (i, j), 1 <= i < j <= n.
class RootIdeal {
 public:
  using Root = std::pair<int, int>;

  /// The empty ideal in rank n.
  explicit RootIdeal(int n = 1);
  static RootIdeal empty(int n) { return RootIdeal(n); }
  /// All positive roots.
  static RootIdeal full(int n);

  int n() const { return n_; }
  const std::set<Root>& pairs() const { return pairs_; }
  bool contains(int i, int j) const { return pairs_.count({i, j}) != 0; }
  std::size_t size() const { return pairs_.size(); }

  /// Removable roots: members (i,j) with neither (i+1,j) nor (i,j-1) in the ideal.
  std::vector<Root> corners() const;
  /// Throws DomainError if (i,j) is not a corner.
  RootIdeal remove_corner(Root corner) const;

  /// Largest row index l with (l, i) in the ideal, or 0.
  int h_col(int i) const;
  bool is_shallow() const;

  /// Staircase picture: row i lists columns j > i, '#' for ideal members.
  std::string render() const;
  /// "1,3;1,4;..." (empty string for the empty ideal).
  std::string to_string() const;

  friend bool operator==(const RootIdeal&, const RootIdeal&) = default;
  friend auto operator<=>(const RootIdeal&, const RootIdeal&) = default;

 private:
  friend RootIdeal validate_root_ideal(const std::vector<std::pair<int, int>>& pairs, int n);
  int n_;
  std::set<Root> pairs_;
};

/// Throws DomainError when a pair is out of range or the set is not upward closed.
RootIdeal validate_root_ideal(const std::vector<std::pair<int, int>>& pairs, int n);

/// Parses "1,3;1,4" (also accepts "" for the empty ideal and "full").
RootIdeal parse_root_ideal(const std::string& text, int n);

/// The ideal {(i, j) : j > max(i, i + k - weight_i)}. Requires
/// weight_{i+1} <= weight_i + 1 for all i (always true for partitions);
/// weight has length n.
RootIdeal psi_of(const std::vector<int>& weight, int k, int n);

}  // namespace kschur
