#pragma once

#include <string>

#include "kschur/bases.hpp"
#include "kschur/io.hpp"

namespace kschur {

/// Outcome of a positivity claim, kept as data so that failures print.
struct Verdict {
  std::string claim;
  Json inputs;
  Json expansion;
  bool nonnegative = false;
  /// First negative term or first residual term; null when none.
  Json witness;

  Json to_json() const;
};

Verdict make_verdict(const std::string& claim, Json inputs, const KSchurExpansion& e);
Verdict make_verdict(const std::string& claim, Json inputs, const CoproductExpansion& e);

/// branch_k(lambda, k) into the (k+1)-Schur basis.
Verdict branch_verdict(const Partition& lambda, int k);
/// Hall-Littlewood character of lambda in the k-Schur basis; a residual means
/// the support left the k-bounded partitions.
Verdict hl_filtration_verdict(const Partition& lambda, int k);
Verdict product_verdict(const Partition& lambda, int k, const Partition& mu, int l);
Verdict coproduct_verdict(const Partition& lambda, int k, int m1, int m2);
/// gh_character(lambda) in the k-Schur basis with t as a scalar.
Verdict refined_positivity(const Partition& lambda, int k);

}  // namespace kschur
