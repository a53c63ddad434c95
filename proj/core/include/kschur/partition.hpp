#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace kschur {

/// Integer partition in canonical form: weakly decreasing, strictly positive
/// parts (trailing zeros are stripped on construction).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Parts, without trailing zeros.
  const std::vector<int>& parts() const { return parts_; }
  /// lambda_{i+1} (0-based row index); zero past the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Parts padded with zeros to length n (n >= length()).
  std::vector<int> padded(int n) const;

  /// Comma-separated parts, "" for the empty partition.
  std::string to_string() const;
  /// Parses "6,5,5,3,1,1". Empty string or "0" gives the empty partition.
  static Partition parse(const std::string& text);

  bool contains(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; a total order that extends dominance.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

Partition conjugate(const Partition& lambda);

/// Hook length of box (x, y): column x, row y, both 0-based.
int hook(const Partition& lambda, int x, int y);

bool is_r_core(const Partition& lambda, int r);

/// n(lambda) = sum lambda_i (lambda_i - 1) / 2.
long long n_stat(const Partition& lambda);
/// n(lambda').
long long m_stat(const Partition& lambda);

/// Dominance order lambda <= mu; throws DomainError on size mismatch.
bool dominance_leq(const Partition& lambda, const Partition& mu);
/// Dominance comparison that returns false instead of throwing.
bool dominates(const Partition& mu, const Partition& lambda);

/// All partitions of m in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int m);
/// Partitions of m with parts at most k, decreasing lexicographic order
/// (a linear extension of dominance, largest first).
std::vector<Partition> enumerate_kbounded(int m, int k);

bool is_kbounded(const Partition& lambda, int k);

/// The (k+1)-core `core` and inner shape `inner` attached to a k-bounded
/// partition: core_i - inner_i = lambda_i and a box of the core lies in the
/// inner shape exactly when its hook exceeds k+1.
struct CorePair {
  Partition core;
  Partition inner;
  int bound = 0;
};

/// Throws DomainError when lambda is not k-bounded. The result is checked
/// against the CorePair hook characterization before it is returned.
CorePair kbounded_to_core(const Partition& lambda, int k);
/// Inverse of kbounded_to_core; throws DomainError if gamma is not a (k+1)-core.
Partition core_to_kbounded(const Partition& gamma, int k);
/// True when `pair` satisfies every CorePair invariant for its bound.
bool check_core_pair(const CorePair& pair);

/// k-conjugate of a k-bounded partition.
Partition omega_k(const Partition& lambda, int k);
/// Size of the inner shape of the core pair.
int d_k(const Partition& lambda, int k);

/// Ribbon decomposition of core(lambda)/core(mu) for one term of the
/// e1-skewing rule: `ribbon_count` translated ribbons of `common_height`
/// rows, and one spin per marked ribbon.
struct RibbonData {
  /// Row of lambda/mu when mu is lambda minus one box, else -1.
  int removed_row = -1;
  int ribbon_count = 0;
  int common_height = 0;
  std::vector<int> spins;
};

struct PieriTerm {
  Partition mu;
  RibbonData ribbons;
};

/// All k-bounded mu with |mu| = |lambda| - 1 whose core is contained in
/// core(lambda), with their ribbon data. mu need not lie inside lambda.
std::vector<PieriTerm> pieri_pairs(const Partition& lambda, int k);

}  // namespace kschur
