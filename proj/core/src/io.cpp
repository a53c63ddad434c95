#include "kschur/io.hpp"

#include <sstream>

#include "kschur/error.hpp"

namespace kschur {

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const QTPolynomial& c) {
  Json out = Json::array();
  for (const auto& [e, x] : c.terms()) out.push_back({{"q", e.first}, {"t", e.second}, {"c", x.get_str()}});
  return out;
}

Json to_json(const SchurExpansion& e) {
  Json out = Json::array();
  for (const auto& [p, c] : e.coeffs) out.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const RootIdeal& psi) {
  Json pairs = Json::array();
  for (const auto& [i, j] : psi.pairs()) pairs.push_back({i, j});
  return {{"n", psi.n()}, {"pairs", pairs}};
}

Json to_json(const KSchurExpansion& e) {
  return {{"k", e.k}, {"expansion", to_json(e.as_table(0))}, {"residual", to_json(e.residual)}};
}

Json to_json(const CoproductExpansion& e) {
  auto table = [](const auto& m) {
    Json out = Json::array();
    for (const auto& [key, c] : m)
      out.push_back({{"left", to_json(key.first)}, {"right", to_json(key.second)}, {"coeff", to_json(c)}});
    return out;
  };
  return {{"k", e.k}, {"terms", table(e.coeffs)}, {"residual", table(e.residual)}};
}

Json to_json(const GHCharacter& ch) { return {{"m", ch.m}, {"character", to_json(ch.as_expansion(ch.m + 1))}}; }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition JSON must be an array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DomainError("partition JSON must be an array of integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

QTPolynomial qt_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("coefficient JSON must be an array");
  QTPolynomial out;
  for (const auto& term : j) {
    BigInt c;
    if (c.set_str(term.at("c").get<std::string>(), 10) != 0) throw DomainError("invalid coefficient");
    out.add_term(term.at("q").get<int>(), term.at("t").get<int>(), c);
  }
  return out;
}

SchurExpansion expansion_from_json(const Json& j, int n) {
  if (!j.is_array()) throw DomainError("expansion JSON must be an array");
  SchurExpansion out{n, {}};
  for (const auto& term : j) out.add(partition_from_json(term.at("partition")), qt_from_json(term.at("coeff")));
  return out;
}

RootIdeal root_ideal_from_json(const Json& j) {
  std::vector<RootIdeal::Root> pairs;
  for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return validate_root_ideal(pairs, j.at("n").get<int>());
}

std::string to_csv(const SchurExpansion& e) {
  std::ostringstream os;
  os << "partition,q,t,coeff\n";
  for (const auto& [p, c] : e.coeffs)
    for (const auto& [x, v] : c.terms()) os << '"' << p.to_string() << "\"," << x.first << ',' << x.second << ',' << v.get_str() << '\n';
  return os.str();
}

}  // namespace kschur
