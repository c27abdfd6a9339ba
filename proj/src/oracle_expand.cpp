#include "kernels_common.hpp"
#include "superhopf/basis_change.hpp"
#include "superhopf/kernels.hpp"
#include "superhopf/oracle.hpp"
#include "superhopf/posets.hpp"

namespace superhopf {

namespace {

CPoly expand_Mc(const DottedComposition& alpha, std::size_t N) {
  CPoly out(N);
  for (const auto& a : kernels::detail::increasing_tuples(alpha.length(), N)) {
    out.add(monomial_Aalpha(a, alpha), 1);
  }
  return out;
}

}  // namespace

NcPoly expand(Basis basis, const SetSupercomposition& I, std::size_t N) {
  switch (basis) {
    case Basis::Mnc: return kernels::expand_M_parallel(I, N);
    case Basis::Q: {
      NcPoly out(N);
      for (const auto& J : sc_upset_elements(I)) out.add_scaled(kernels::expand_M_parallel(J, N), 1);
      return out;
    }
    case Basis::m:
      require_set_superpartition(I);
      return kernels::expand_m_parallel(I, N);
    case Basis::MonF:
      return expand(change_basis(NcCombination::single(Basis::MonF, I), Basis::Q), N);
    default: break;
  }
  throw std::invalid_argument("basis " + basis_name(basis) + " is not indexed by set supercompositions");
}

CPoly expand(Basis basis, const DottedComposition& alpha, std::size_t N) {
  switch (basis) {
    case Basis::Mc: return expand_Mc(alpha, N);
    case Basis::L: {
      CPoly out(N);
      for (const auto& beta : dotted_downset_elements(alpha)) out.add_scaled(expand_Mc(beta, N), 1);
      return out;
    }
    default: break;
  }
  throw std::invalid_argument("basis " + basis_name(basis) + " is not indexed by dotted compositions");
}

NcPoly expand(const NcCombination& x, std::size_t N) {
  NcPoly out(N);
  for (const auto& [I, c] : x.terms()) out.add_scaled(expand(x.basis(), I, N), c);
  return out;
}

CPoly expand(const CCombination& x, std::size_t N) {
  CPoly out(N);
  for (const auto& [alpha, c] : x.terms()) out.add_scaled(expand(x.basis(), alpha, N), c);
  return out;
}

}  // namespace superhopf
