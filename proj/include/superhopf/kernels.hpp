#pragma once

// Hot loops of the oracle in two versions: a plain serial reference and an
// OpenMP version. Both return identical results.

#include "superhopf/oracle.hpp"

namespace superhopf::kernels {

NcPoly multiply_serial(const NcPoly& f, const NcPoly& g);
NcPoly multiply_parallel(const NcPoly& f, const NcPoly& g);
CPoly multiply_serial(const CPoly& f, const CPoly& g);
CPoly multiply_parallel(const CPoly& f, const CPoly& g);

/// expand(Mnc, I, N): one monomial per increasing choice a_1 < ... < a_k in [N].
NcPoly expand_M_serial(const SetSupercomposition& I, std::size_t N);
NcPoly expand_M_parallel(const SetSupercomposition& I, std::size_t N);

/// expand(m, I, N): one signed monomial per injective choice of block labels.
NcPoly expand_m_serial(const SetSupercomposition& I, std::size_t N);
NcPoly expand_m_parallel(const SetSupercomposition& I, std::size_t N);

}  // namespace superhopf::kernels
