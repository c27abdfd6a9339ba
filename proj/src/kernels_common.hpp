#pragma once

// Shared pieces of the serial and OpenMP kernels.

#include <vector>

#include "superhopf/oracle.hpp"

namespace superhopf::kernels::detail {

/// All increasing k-tuples from [N].
std::vector<std::vector<Value>> increasing_tuples(std::size_t k, std::size_t N);
/// All injective k-tuples into [N].
std::vector<std::vector<Value>> injective_tuples(std::size_t k, std::size_t N);

/// Block r of I labeled by labels[r]; the thetas are sorted and the sign of
/// that sort is returned.
std::pair<NcMonomial, int> labeled_monomial(const SetSupercomposition& I, const std::vector<Value>& labels);

}  // namespace superhopf::kernels::detail
