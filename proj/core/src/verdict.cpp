#include "kschur/verdict.hpp"

#include "kschur/macdonald.hpp"

namespace kschur {

Json Verdict::to_json() const {
  return {{"claim", claim}, {"inputs", inputs}, {"expansion", expansion}, {"nonnegative", nonnegative}, {"witness", witness}};
}

namespace {

Json term_json(const std::string& kind, const Json& where, const QTPolynomial::Exponent& e, const BigInt& c) {
  return {{"kind", kind}, {"at", where}, {"q", e.first}, {"t", e.second}, {"c", c.get_str()}};
}

}  // namespace

Verdict make_verdict(const std::string& claim, Json inputs, const KSchurExpansion& e) {
  Verdict v{claim, std::move(inputs), to_json(e), true, nullptr};
  if (auto neg = e.first_negative()) {
    v.nonnegative = false;
    v.witness = term_json("negative", to_json(neg->first), neg->second.first, neg->second.second);
  } else if (!e.residual.is_zero()) {
    v.nonnegative = false;
    const auto& [p, c] = *e.residual.coeffs.begin();
    const auto& [x, val] = *c.terms().begin();
    v.witness = term_json("residual", to_json(p), x, val);
  }
  return v;
}

Verdict make_verdict(const std::string& claim, Json inputs, const CoproductExpansion& e) {
  Verdict v{claim, std::move(inputs), to_json(e), true, nullptr};
  for (const auto& [key, c] : e.coeffs)
    if (auto neg = c.first_negative()) {
      v.nonnegative = false;
      v.witness = term_json("negative", Json::array({to_json(key.first), to_json(key.second)}), neg->first, neg->second);
      return v;
    }
  if (!e.residual.empty()) {
    v.nonnegative = false;
    const auto& [key, c] = *e.residual.begin();
    const auto& [x, val] = *c.terms().begin();
    v.witness = term_json("residual", Json::array({to_json(key.first), to_json(key.second)}), x, val);
  }
  return v;
}

Verdict branch_verdict(const Partition& lambda, int k) {
  return make_verdict("branch", {{"lambda", to_json(lambda)}, {"k", k}}, branch_k(lambda, k));
}

Verdict hl_filtration_verdict(const Partition& lambda, int k) {
  return make_verdict("hl-filtration", {{"lambda", to_json(lambda)}, {"k", k}},
                      kschur_expand(hall_littlewood(lambda, default_rank(lambda.size())), k));
}

Verdict product_verdict(const Partition& lambda, int k, const Partition& mu, int l) {
  return make_verdict("product", {{"lambda", to_json(lambda)}, {"k", k}, {"mu", to_json(mu)}, {"l", l}},
                      product_expand(lambda, k, mu, l));
}

Verdict coproduct_verdict(const Partition& lambda, int k, int m1, int m2) {
  return make_verdict("coproduct", {{"lambda", to_json(lambda)}, {"k", k}, {"m1", m1}, {"m2", m2}},
                      coproduct_expand(lambda, k, m1, m2));
}

Verdict refined_positivity(const Partition& lambda, int k) {
  return make_verdict("refined-macdonald", {{"lambda", to_json(lambda)}, {"k", k}}, refined_expansion(lambda, k));
}

}  // namespace kschur
