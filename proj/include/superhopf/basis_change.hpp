#pragma once

// Change of basis by the defining triangular sums and their Mobius inverses.
//
// Direct conversions: Q <-> Mnc, MonF <-> Q, m <-> Mnc, L <-> Mc. Other pairs
// on the same side are routed through these. Mnc -> m succeeds only for
// symmetric input. Crossing between the commutative and noncommutative sides
// is not a change of basis (see abelianize).

#include "superhopf/combination.hpp"

namespace superhopf {

/// Thrown when a conversion is not defined for the given input.
class ConversionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

NcCombination change_basis(const NcCombination& x, Basis target);
CCombination change_basis(const CCombination& x, Basis target);

/// Sign of I^sigma in the m expansion, indexed by the blocks' new order.
/// Returns every arrangement of the blocks of I with (-1)^{inv_I(sigma)}.
std::vector<std::pair<SetSupercomposition, int>> block_arrangements(const SetSupercomposition& I);

/// Sorts the blocks of I into set superpartition order. The sign is that of
/// the induced reordering of fermionic blocks, so m_I = sign * m_P.
/// Throws AxiomError if two blocks coincide.
std::pair<SetSupercomposition, int> normalize_superpartition(const SetSupercomposition& I);

}  // namespace superhopf
