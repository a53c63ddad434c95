#include "kschur/affine_character.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kschur/error.hpp"

namespace kschur {

std::size_t AffineCharacter::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::int16_t s : k.slots) {
    h ^= static_cast<std::uint16_t>(s);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

AffineCharacter::AffineCharacter(int n, int level) : n_(n), level_(level) {
  if (n < 1 || n > kMaxRank)
    throw DomainError("rank " + std::to_string(n) + " outside the supported range 1.." + std::to_string(kMaxRank));
}

AffineCharacter AffineCharacter::trivial(int n) {
  AffineCharacter c(n, 0);
  c.add(std::vector<int>(static_cast<std::size_t>(n), 0), 0, 1);
  return c;
}

AffineCharacter::Key AffineCharacter::make_key(const std::vector<int>& v, int delta) {
  Key k;
  auto fit = [](int x) {
    if (x < std::numeric_limits<std::int16_t>::min() || x > std::numeric_limits<std::int16_t>::max())
      throw InconsistencyError("affine weight component out of range");
    return static_cast<std::int16_t>(x);
  };
  for (std::size_t i = 0; i < v.size(); ++i) k.slots[i] = fit(v[i]);
  k.slots[kMaxRank] = fit(delta);
  return k;
}

std::vector<int> AffineCharacter::weight_of(const Key& key) const {
  return std::vector<int>(key.slots.begin(), key.slots.begin() + n_);
}

void AffineCharacter::add_key(const Key& key, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, mult);
  if (!inserted) {
    if (__builtin_add_overflow(it->second, mult, &it->second))
      throw InconsistencyError("affine character multiplicity overflow");
    if (it->second == 0) terms_.erase(it);
  }
}

void AffineCharacter::add(const std::vector<int>& v, int delta, std::int64_t mult) {
  if (static_cast<int>(v.size()) != n_) throw DomainError("weight length does not match rank");
  add_key(make_key(v, delta), mult);
}

std::int64_t AffineCharacter::multiplicity(const std::vector<int>& v, int delta) const {
  auto it = terms_.find(make_key(v, delta));
  return it == terms_.end() ? 0 : it->second;
}

AffineCharacter AffineCharacter::tensor_fundamental(int j, int m) const {
  if (j < 1 || j > n_) throw DomainError("fundamental weight index out of range");
  if (m < 0) throw DomainError("negative multiple of a fundamental weight");
  AffineCharacter out(n_, level_ + m);
  out.terms_.reserve(terms_.size());
  for (const auto& [key, mult] : terms_) {
    Key shifted = key;
    for (int i = 0; i < j; ++i) shifted.slots[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(shifted.slots[static_cast<std::size_t>(i)] + m);
    out.terms_.emplace(shifted, mult);
  }
  return out;
}

std::vector<std::pair<AffineWeight, std::int64_t>> AffineCharacter::sorted_terms() const {
  std::vector<std::pair<AffineWeight, std::int64_t>> out;
  out.reserve(terms_.size());
  for (const auto& [key, mult] : terms_) out.push_back({AffineWeight{weight_of(key), level_, delta_of(key)}, mult});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.delta != b.first.delta) return a.first.delta > b.first.delta;
    return a.first.v > b.first.v;
  });
  return out;
}

}  // namespace kschur
