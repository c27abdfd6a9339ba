#pragma once

// Products, coproducts, counit, antipode and abelianization for the four
// noncommutative bases (Mnc, Q, m, MonF) and the two commutative ones (Mc, L).

#include <vector>

#include "superhopf/combination.hpp"

namespace superhopf {

struct SignedIndex {
  SetSupercomposition index;
  int sign = 1;

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// QSh(I, J). Entries reached from different shuffles are kept separately.
std::vector<SignedIndex> quasi_shuffles(const SetSupercomposition& I, const SetSupercomposition& J);
/// SSh(I, J).
std::vector<SignedIndex> super_shuffles(const SetSupercomposition& I, const SetSupercomposition& J);

NcCombination product_M(const SetSupercomposition& I, const SetSupercomposition& J);
NcCombination product_Q(const SetSupercomposition& I, const SetSupercomposition& J);
/// Set superpartition inputs; computed through the Mnc basis.
NcCombination product_m(const SetSupercomposition& I, const SetSupercomposition& J);
/// Superpermutation inputs; computed through the Q basis.
NcCombination product_MonF(const SetSupercomposition& I, const SetSupercomposition& J);

CCombination product_L(const DottedComposition& alpha, const DottedComposition& beta);
/// The L product read off from arbitrary superpermutations I, J.
CCombination product_L_from(const SetSupercomposition& I, const SetSupercomposition& J);
CCombination product_Mc(const DottedComposition& alpha, const DottedComposition& beta);

NcTensor coproduct_M(const SetSupercomposition& I);
NcTensor coproduct_Q(const SetSupercomposition& I);
NcTensor coproduct_m(const SetSupercomposition& I);
NcTensor coproduct_MonF(const SetSupercomposition& I);

/// Bilinear product in the common basis of x and y.
NcCombination multiply(const NcCombination& x, const NcCombination& y);
CCombination multiply(const CCombination& x, const CCombination& y);

NcTensor coproduct(const NcCombination& x);

/// Coefficient of the empty index.
Coeff counit(const NcCombination& x);

/// Antipode in the basis of x (any of Mnc, Q, m, MonF).
NcCombination antipode(const NcCombination& x);

/// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
NcTensor super_tensor_mul(const NcTensor& x, const NcTensor& y);

/// (f (x) g) applied termwise: sum of c * f(a) (x) g(b).
NcTensor tensor_map(const NcTensor& x, NcCombination (*f)(const NcCombination&),
                    NcCombination (*g)(const NcCombination&));

/// Multiplication map applied to a tensor.
NcCombination multiply_tensor(const NcTensor& x);

/// Mnc -> Mc via alpha, Q -> L via gamma (superpermutation indices only).
CCombination abelianize(const NcCombination& x);

}  // namespace superhopf
