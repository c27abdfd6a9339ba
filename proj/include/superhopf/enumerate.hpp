#pragma once

// Exhaustive enumeration of index objects at small size. Output order is
// deterministic but otherwise unspecified.

#include <cstddef>
#include <vector>

#include "superhopf/combinat.hpp"

namespace superhopf {

std::vector<SetSupercomposition> set_supercompositions(std::size_t n, std::size_t m);
/// All set supercompositions with n + m == size.
std::vector<SetSupercomposition> set_supercompositions_of_size(std::size_t size);

std::vector<SetSupercomposition> superpermutations(std::size_t n, std::size_t m);
std::vector<SetSupercomposition> superpermutations_of_size(std::size_t size);

std::vector<SetSupercomposition> set_superpartitions(std::size_t n, std::size_t m);
std::vector<SetSupercomposition> set_superpartitions_of_size(std::size_t size);

/// Dotted compositions with weight + dotted_count == size.
std::vector<DottedComposition> dotted_compositions_of_size(std::size_t size);

/// Every superpermutation I with gamma_of(I) == alpha.
std::vector<SetSupercomposition> gamma_fiber(const DottedComposition& alpha);

}  // namespace superhopf
