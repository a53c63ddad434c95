#pragma once

#include <initializer_list>
#include <ostream>
#include <utility>

#include "kschur/bases.hpp"
#include "kschur/root_ideal.hpp"
#include "kschur/schur_expansion.hpp"

namespace kschur {

inline void PrintTo(const Partition& p, std::ostream* os) { *os << "(" << p.to_string() << ")"; }
inline void PrintTo(const QTPolynomial& c, std::ostream* os) { *os << c.to_string(); }
inline void PrintTo(const SchurExpansion& e, std::ostream* os) { *os << e.to_text(); }

}  // namespace kschur

namespace kschur::testing {

inline QTPolynomial q(int e = 1) { return QTPolynomial::q_power(e); }
inline QTPolynomial t(int e = 1) { return QTPolynomial::t_power(e); }

inline SchurExpansion schur_terms(int n, std::initializer_list<std::pair<Partition, QTPolynomial>> terms) {
  SchurExpansion e{n, {}};
  for (const auto& [p, c] : terms) e.add(p, c);
  return e;
}

inline std::map<Partition, QTPolynomial> coeff_map(std::initializer_list<std::pair<Partition, QTPolynomial>> terms) {
  std::map<Partition, QTPolynomial> out;
  for (const auto& [p, c] : terms) out[p] += c;
  return out;
}

inline const RootIdeal& seven_schur_ideal() {
  static const RootIdeal psi =
      validate_root_ideal({{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 6}}, 6);
  return psi;
}

}  // namespace kschur::testing
