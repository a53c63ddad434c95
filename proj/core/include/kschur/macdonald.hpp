#pragma once

#include <map>
#include <string>
#include <vector>

#include "kschur/bases.hpp"
#include "kschur/partition.hpp"
#include "kschur/qt_polynomial.hpp"
#include "kschur/sym_polynomial.hpp"

namespace kschur {

/// Filling of a diagram drawn with row 0 at the bottom. Cells are listed
/// row by row from the bottom, left to right; entries[i] belongs to cells[i].
struct Filling {
  struct Cell {
    int x = 0;  // column
    int y = 0;  // row, 0 at the bottom
  };
  Partition shape;
  std::vector<Cell> cells;
  std::vector<int> entries;

  static std::vector<Cell> cells_of(const Partition& shape);
};

/// Cells with an entry strictly greater than the entry directly below.
std::vector<int> descents(const Filling& f);
/// Sum of leg + 1 over descents.
int maj(const Filling& f);
/// Attacking inversions minus the arms of the descents.
int inv(const Filling& f);

/// Sum over fillings with entries 1..n of q^inv t^maj x^filling. Fillings
/// are streamed, split over `jobs` threads by the entry of the first cell.
SymPolynomial modified_macdonald(const Partition& mu, int n, int jobs = 1);

/// A composition of at most three involutions applied to the Schur expansion
/// of a modified Macdonald polynomial: first t -> 1/t scaled by t^{m_stat(mu)},
/// then q <-> t, then the index lambda -> lambda'.
struct ConventionMap {
  bool reverse_t = false;
  bool swap_qt = false;
  bool conjugate_index = false;

  std::string describe() const;
  friend bool operator==(const ConventionMap&, const ConventionMap&) = default;
};

/// All eight candidates in the fixed search order.
std::vector<ConventionMap> convention_candidates();
/// First candidate reproducing the two size-3 reference characters.
ConventionMap select_convention();
/// The frozen choice (checked against select_convention() in the tests).
inline constexpr ConventionMap kGHConvention{true, true, false};

SchurExpansion apply_convention(const ConventionMap& c, const Partition& mu, const SchurExpansion& h);

/// Bigraded character sum_mu K_{mu,lambda}(q,t) s_mu.
struct GHCharacter {
  int m = 0;
  std::map<Partition, QTPolynomial> coeffs;

  SchurExpansion as_expansion(int n) const;
  /// sum coeffs(1,1) * (number of standard tableaux) == m!.
  bool regular_representation_check() const;
};

GHCharacter gh_character(const Partition& lambda, int jobs = 1);
/// Same with an explicit convention (used for the desk selection).
GHCharacter gh_character(const Partition& lambda, const ConventionMap& c, int jobs = 1);

/// K_{lambda,mu}(q,t).
QTPolynomial qt_kostka(const Partition& lambda, const Partition& mu);

/// gh_character(lambda) expanded in the k-Schur basis with t as a scalar.
KSchurExpansion refined_expansion(const Partition& lambda, int k);

/// Number of standard Young tableaux (hook length formula).
BigInt standard_tableaux(const Partition& lambda);

/// LaTeX display of a GH character and its k-Schur expansion.
std::string gh_latex(const Partition& lambda, const GHCharacter& ch, const KSchurExpansion* kexp);

}  // namespace kschur
