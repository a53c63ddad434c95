#pragma once

#include <vector>

#include "kschur/affine_character.hpp"
#include "kschur/partition.hpp"
#include "kschur/root_ideal.hpp"
#include "kschur/schur_expansion.hpp"

namespace kschur {

/// Affine Dynkin index in {0, ..., n-1}.
class DemazureIndex {
 public:
  DemazureIndex(int i, int n);
  int value() const { return i_; }
  int rank() const { return n_; }

 private:
  int i_;
  int n_;
};

/// Pairing of a weight with the coroot of index i: v_i - v_{i+1} for i >= 1,
/// level + v_n - v_1 for i = 0.
int coroot_pairing(const DemazureIndex& i, const std::vector<int>& v, int level);

/// Simple reflection s_i on affine weights. s_0 moves p = level + v_n - v_1
/// from v_n to v_1 and lowers delta by p.
AffineWeight affine_reflect(const DemazureIndex& i, const AffineWeight& w);

/// Demazure operator: each e^mu with pairing p becomes the string
/// e^mu + e^{mu - alpha_i} + ... + e^{mu - p alpha_i} for p >= 0, vanishes for
/// p = -1 and becomes -(e^{mu + alpha_i} + ... + e^{mu + (-p-1) alpha_i}) for
/// p <= -2. Subtracting alpha_0 lowers delta by one.
AffineCharacter demazure_op(const DemazureIndex& i, const AffineCharacter& f);

/// A run of consecutive affine indices start, start+1, ... (mod n). Proper
/// intervals have length < n; length 0 is the empty interval.
class CyclicInterval {
 public:
  CyclicInterval(int start, int length, int n);
  /// [i, j]: i through j inclusive.
  static CyclicInterval closed(int i, int j, int n);
  /// [i, j) = [i, j-1]; empty when j = i (mod n).
  static CyclicInterval right_open(int i, int j, int n);
  /// (i, j] = [i+1, j]; empty when j = i (mod n).
  static CyclicInterval left_open(int i, int j, int n);

  int start() const { return start_; }
  int length() const { return length_; }
  /// Indices in application order (start first).
  std::vector<int> indices() const;

 private:
  int start_;
  int length_;
  int n_;
};

/// Applies the operators of `interval` in order, the first index first.
AffineCharacter demazure_cyclic(const CyclicInterval& interval, const AffineCharacter& f);

/// Character engine: starting from the trivial character, for j = n down to 1
/// tensor with m_j times the fundamental affine weight of index j
/// (m_j = lambda_j - lambda_{j+1}) and apply the Demazure operators over
/// [j, h_j(psi)). The final character is cut into delta-slices, delta-degree
/// -d becomes q^d, and each slice is peeled into Schur polynomials.
SchurExpansion catalan_char(const RootIdeal& psi, const Partition& lambda, int n);

/// The raw affine character before peeling (used by tests and benchmarks).
AffineCharacter catalan_affine_character(const RootIdeal& psi, const Partition& lambda, int n);

/// Sign of the delta-degree to q-exponent conversion: q-exponent = kDeltaToQ * delta.
inline constexpr int kDeltaToQ = -1;

/// Extremal weights Lambda^{(n+1)}, ..., Lambda^{(1)} of the successive
/// stages of catalan_char for a shallow ideal. Finite parts follow the
/// closed-form recurrences; the result is cross-checked against direct
/// reflection of the previous weight. Throws DomainError if psi is not shallow.
std::vector<AffineWeight> chain_weights(const RootIdeal& psi, const Partition& lambda);

/// Same chain computed only by reflecting along [i, h_i).
std::vector<AffineWeight> chain_weights_by_reflection(const RootIdeal& psi, const Partition& lambda);

/// Peak/monotonicity pattern of a stage weight: for h_i > 0 the first i-1
/// entries rise up to position h_i then fall, and entry h_i is at most
/// entry i-1 plus m^{(i-1)}; for h_i = 0 the entries i..n rise and stay below
/// entry i-1, while entries 1..i-1 fall.
bool chain_stage_is_monotone(const RootIdeal& psi, const Partition& lambda, const std::vector<AffineWeight>& chain,
                             int stage);

struct SocleTerm {
  Partition partition;
  int degree = 0;
};

/// Reads the top q-degree term of catalan_char(psi_of(lambda, k), lambda) in
/// n variables. Throws InconsistencyError if the top degree is not carried
/// by a single partition with coefficient q^d.
SocleTerm socle_partition(const Partition& lambda, int k, int n);

/// psi_of for a partition padded to n.
RootIdeal kschur_ideal(const Partition& lambda, int k, int n);

}  // namespace kschur
