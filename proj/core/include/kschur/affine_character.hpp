#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kschur {

/// Largest rank n the affine engine handles.
inline constexpr int kMaxRank = 15;

/// Affine weight v_1 e_1 + ... + v_n e_n + level * (level-one weight) + delta * (null root).
struct AffineWeight {
  std::vector<int> v;
  int level = 0;
  int delta = 0;

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

/// Finite sum of affine weights with integer multiplicities. Every term has
/// the same level, so the level is stored once.
class AffineCharacter {
 public:
  struct Key {
    std::array<std::int16_t, kMaxRank + 1> slots{};  // v_1..v_n, then delta at index kMaxRank
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  using Terms = std::unordered_map<Key, std::int64_t, KeyHash>;

  AffineCharacter(int n, int level);
  /// e^0 at level 0.
  static AffineCharacter trivial(int n);

  int n() const { return n_; }
  int level() const { return level_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::vector<int>& v, int delta, std::int64_t mult);
  void add_key(const Key& key, std::int64_t mult);
  std::int64_t multiplicity(const std::vector<int>& v, int delta) const;

  /// Tensors with the one-dimensional module of weight `m` times the
  /// fundamental affine weight of index j (1 <= j <= n): adds m to v_1..v_j
  /// and m to the level.
  AffineCharacter tensor_fundamental(int j, int m) const;

  /// Terms as (weight, multiplicity) in sorted order (by delta descending,
  /// then weight vector descending).
  std::vector<std::pair<AffineWeight, std::int64_t>> sorted_terms() const;

  friend bool operator==(const AffineCharacter& a, const AffineCharacter& b) {
    return a.n_ == b.n_ && a.level_ == b.level_ && a.terms_ == b.terms_;
  }

  static Key make_key(const std::vector<int>& v, int delta);
  std::vector<int> weight_of(const Key& key) const;
  static int delta_of(const Key& key) { return key.slots[kMaxRank]; }

 private:
  int n_;
  int level_;
  Terms terms_;
};

}  // namespace kschur
