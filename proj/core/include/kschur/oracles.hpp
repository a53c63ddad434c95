#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kschur/partition.hpp"
#include "kschur/qt_polynomial.hpp"
#include "kschur/root_ideal.hpp"
#include "kschur/schur_expansion.hpp"
#include "kschur/sym_polynomial.hpp"

// Brute-force reference implementations. They share data types with the
// engines but none of their algorithms.
namespace kschur::oracle {

/// Semistandard tableau, rows top to bottom (English), entries from 1.
struct SSYT {
  Partition shape;
  std::vector<std::vector<int>> rows;
  Partition content;
};

/// All SSYT of the given shape whose content is the composition `content`.
std::vector<SSYT> enumerate_ssyt(const Partition& shape, const std::vector<int>& content);

/// Lascoux-Schutzenberger charge of a word with partition content.
int charge(const std::vector<int>& word);
/// Reading word: rows from bottom to top, each left to right.
std::vector<int> reading_word(const SSYT& t);

/// Sum of q^{charge} over SSYT of shape lambda and content mu.
QTPolynomial kostka_charge(const Partition& lambda, const Partition& mu);

struct Straightened {
  int sign = 0;
  /// Weakly decreasing; the last entries may be negative.
  std::optional<std::vector<int>> weight;
  bool polynomial() const { return weight && (weight->empty() || weight->back() >= 0); }
};

/// s_gamma for an arbitrary integer vector gamma, rewritten as +-s_lambda or 0
/// through gamma + rho.
Straightened straighten_schur(const std::vector<int>& gamma);

/// Truncated raising-operator series: the sum over m : psi -> N with
/// total <= qmax of q^{total} s_{lambda + sum m(i,j)(e_i - e_j)}.
SchurExpansion raising_series_catalan(const RootIdeal& psi, const Partition& lambda, int n, int qmax);

/// Modified Macdonald polynomials of size m in n variables, by
/// orthogonalizing monomial symmetric functions under the (q,t) scalar
/// product at integer points and interpolating. m <= 4.
std::map<Partition, SymPolynomial> gram_schmidt_macdonald(int m, int n);

}  // namespace kschur::oracle
