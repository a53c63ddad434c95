#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "kschur/bases.hpp"
#include "kschur/macdonald.hpp"
#include "kschur/partition.hpp"
#include "kschur/qt_polynomial.hpp"
#include "kschur/root_ideal.hpp"
#include "kschur/schur_expansion.hpp"

namespace kschur {

using Json = nlohmann::json;

Json to_json(const Partition& p);
/// Array of {"q": a, "t": b, "c": "decimal"} in QTPolynomial order.
Json to_json(const QTPolynomial& c);
/// Array of {"partition": [...], "coeff": [...]}, lexicographic order.
Json to_json(const SchurExpansion& e);
/// {"n": n, "pairs": [[i, j], ...]}.
Json to_json(const RootIdeal& psi);
/// {"k": k, "expansion": [...], "residual": [...]}.
Json to_json(const KSchurExpansion& e);
/// {"k": k, "terms": [{"left": [...], "right": [...], "coeff": [...]}], "residual": [...]}.
Json to_json(const CoproductExpansion& e);
/// {"m": m, "character": [...]}.
Json to_json(const GHCharacter& ch);

Partition partition_from_json(const Json& j);
QTPolynomial qt_from_json(const Json& j);
SchurExpansion expansion_from_json(const Json& j, int n);
RootIdeal root_ideal_from_json(const Json& j);

/// "partition,q,t,coeff" rows, one per monomial of every coefficient.
std::string to_csv(const SchurExpansion& e);

}  // namespace kschur
