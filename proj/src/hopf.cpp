#include "superhopf/hopf.hpp"

#include <map>

#include "superhopf/basis_change.hpp"
#include "superhopf/text.hpp"

namespace superhopf {

namespace {

NcCombination sum_signed(Basis basis, const std::vector<SignedIndex>& terms) {
  NcCombination out(basis);
  for (const auto& t : terms) out.add(t.index, t.sign);
  return out;
}

NcTensor deconcatenate(Basis basis, const SetSupercomposition& I, const std::vector<std::size_t>& cuts) {
  NcTensor out(basis);
  for (std::size_t i : cuts) {
    out.add(standardized_slice(I, 0, i), standardized_slice(I, i, I.length()), 1);
  }
  return out;
}

std::vector<std::size_t> all_cuts(const SetSupercomposition& I) {
  std::vector<std::size_t> cuts(I.length() + 1);
  for (std::size_t i = 0; i <= I.length(); ++i) cuts[i] = i;
  return cuts;
}

}  // namespace

NcCombination product_M(const SetSupercomposition& I, const SetSupercomposition& J) {
  return sum_signed(Basis::Mnc, quasi_shuffles(I, J));
}

NcCombination product_Q(const SetSupercomposition& I, const SetSupercomposition& J) {
  return sum_signed(Basis::Q, super_shuffles(I, J));
}

NcCombination product_m(const SetSupercomposition& I, const SetSupercomposition& J) {
  require_set_superpartition(I);
  require_set_superpartition(J);
  auto x = change_basis(NcCombination::single(Basis::m, I), Basis::Mnc);
  auto y = change_basis(NcCombination::single(Basis::m, J), Basis::Mnc);
  return change_basis(multiply(x, y), Basis::m);
}

NcCombination product_MonF(const SetSupercomposition& I, const SetSupercomposition& J) {
  require_superpermutation(I);
  require_superpermutation(J);
  auto x = change_basis(NcCombination::single(Basis::MonF, I), Basis::Q);
  auto y = change_basis(NcCombination::single(Basis::MonF, J), Basis::Q);
  return change_basis(multiply(x, y), Basis::MonF);
}

CCombination product_L_from(const SetSupercomposition& I, const SetSupercomposition& J) {
  require_superpermutation(I);
  require_superpermutation(J);
  CCombination out(Basis::L);
  for (const auto& t : super_shuffles(I, J)) out.add(gamma_of(t.index), t.sign);
  return out;
}

CCombination product_L(const DottedComposition& alpha, const DottedComposition& beta) {
  return product_L_from(lift(alpha), lift(beta));
}

CCombination product_Mc(const DottedComposition& alpha, const DottedComposition& beta) {
  return abelianize(product_M(block_lift(alpha), block_lift(beta)));
}

NcTensor coproduct_M(const SetSupercomposition& I) { return deconcatenate(Basis::Mnc, I, all_cuts(I)); }

NcTensor coproduct_Q(const SetSupercomposition& I) { return deconcatenate(Basis::Q, I, all_cuts(I)); }

NcTensor coproduct_MonF(const SetSupercomposition& I) {
  require_superpermutation(I);
  return deconcatenate(Basis::MonF, I, global_descents(I));
}

NcTensor coproduct_m(const SetSupercomposition& I) {
  require_set_superpartition(I);
  const std::size_t k = I.length();
  if (k > 20) throw std::invalid_argument("coproduct_m supports at most 20 blocks");
  NcTensor out(Basis::m);
  for (std::uint32_t A = 0; A < (1u << k); ++A) {
    BlockSequence in, rest;
    std::size_t inv = 0;
    std::size_t fermions_outside = 0;  // fermionic blocks p in A^c seen so far
    for (std::size_t p = 0; p < k; ++p) {
      bool inside = A & (1u << p);
      if (inside) {
        in.push_back(I[p]);
        if (I[p].fermionic()) inv += fermions_outside;
      } else {
        rest.push_back(I[p]);
        if (I[p].fermionic()) ++fermions_outside;
      }
    }
    out.add(standardize(in), standardize(rest), inv % 2 ? -1 : 1);
  }
  return out;
}

namespace {

NcCombination basis_product(Basis b, const SetSupercomposition& I, const SetSupercomposition& J) {
  switch (b) {
    case Basis::Mnc: return product_M(I, J);
    case Basis::Q: return product_Q(I, J);
    case Basis::m: return product_m(I, J);
    case Basis::MonF: return product_MonF(I, J);
    default: break;
  }
  throw std::invalid_argument("basis " + basis_name(b) + " is not indexed by set supercompositions");
}

NcTensor basis_coproduct(Basis b, const SetSupercomposition& I) {
  switch (b) {
    case Basis::Mnc: return coproduct_M(I);
    case Basis::Q: return coproduct_Q(I);
    case Basis::m: return coproduct_m(I);
    case Basis::MonF: return coproduct_MonF(I);
    default: break;
  }
  throw std::invalid_argument("no coproduct for basis " + basis_name(b));
}

CCombination basis_product(Basis b, const DottedComposition& alpha, const DottedComposition& beta) {
  switch (b) {
    case Basis::Mc: return product_Mc(alpha, beta);
    case Basis::L: return product_L(alpha, beta);
    default: break;
  }
  throw std::invalid_argument("basis " + basis_name(b) + " is not indexed by dotted compositions");
}

template <class Index>
Combination<Index> multiply_generic(const Combination<Index>& x, const Combination<Index>& y) {
  if (x.basis() != y.basis()) throw std::invalid_argument("multiplying combinations over different bases");
  Combination<Index> out(x.basis());
  for (const auto& [I, a] : x.terms()) {
    for (const auto& [J, b] : y.terms()) out.add_scaled(basis_product(x.basis(), I, J), a * b);
  }
  return out;
}

}  // namespace

NcCombination multiply(const NcCombination& x, const NcCombination& y) { return multiply_generic(x, y); }

CCombination multiply(const CCombination& x, const CCombination& y) { return multiply_generic(x, y); }

NcTensor coproduct(const NcCombination& x) {
  NcTensor out(x.basis());
  for (const auto& [I, c] : x.terms()) out.add_scaled(basis_coproduct(x.basis(), I), c);
  return out;
}

Coeff counit(const NcCombination& x) { return x.coefficient(SetSupercomposition()); }

namespace {

// S(I) = -sum over Delta(I) without its I (x) 1 term of S(a) b, which is the
// recursive form of Takeuchi's sum for a graded connected bialgebra.
const NcCombination& antipode_of(Basis b, const SetSupercomposition& I,
                                 std::map<SetSupercomposition, NcCombination>& memo) {
  if (auto it = memo.find(I); it != memo.end()) return it->second;
  NcCombination s(b);
  if (I.empty()) {
    s.add(I, 1);
  } else {
    const NcTensor delta = basis_coproduct(b, I);
    for (const auto& [key, c] : delta.terms()) {
      const auto& [left, right] = key;
      if (left == I) continue;
      NcCombination sl = antipode_of(b, left, memo);
      s.add_scaled(multiply(sl, NcCombination::single(b, right)), -c);
    }
  }
  return memo.emplace(I, std::move(s)).first->second;
}

}  // namespace

NcCombination antipode(const NcCombination& x) {
  std::map<SetSupercomposition, NcCombination> memo;
  NcCombination out(x.basis());
  for (const auto& [I, c] : x.terms()) out.add_scaled(antipode_of(x.basis(), I, memo), c);
  return out;
}

NcTensor super_tensor_mul(const NcTensor& x, const NcTensor& y) {
  if (x.basis() != y.basis()) throw std::invalid_argument("multiplying tensors over different bases");
  const Basis b = x.basis();
  NcTensor out(b);
  for (const auto& [k1, c1] : x.terms()) {
    for (const auto& [k2, c2] : y.terms()) {
      int sign = (parity_of(k1.second) && parity_of(k2.first)) ? -1 : 1;
      auto left = basis_product(b, k1.first, k2.first);
      auto right = basis_product(b, k1.second, k2.second);
      Coeff c = c1 * c2 * sign;
      for (const auto& [L, a] : left.terms()) {
        for (const auto& [R, d] : right.terms()) out.add(L, R, c * a * d);
      }
    }
  }
  return out;
}

NcTensor tensor_map(const NcTensor& x, NcCombination (*f)(const NcCombination&),
                    NcCombination (*g)(const NcCombination&)) {
  NcTensor out(x.basis());
  for (const auto& [key, c] : x.terms()) {
    auto a = f(NcCombination::single(x.basis(), key.first));
    auto b = g(NcCombination::single(x.basis(), key.second));
    for (const auto& [L, u] : a.terms()) {
      for (const auto& [R, v] : b.terms()) out.add(L, R, c * u * v);
    }
  }
  return out;
}

NcCombination multiply_tensor(const NcTensor& x) {
  NcCombination out(x.basis());
  for (const auto& [key, c] : x.terms()) {
    out.add_scaled(basis_product(x.basis(), key.first, key.second), c);
  }
  return out;
}

CCombination abelianize(const NcCombination& x) {
  switch (x.basis()) {
    case Basis::Mnc: {
      CCombination out(Basis::Mc);
      for (const auto& [I, c] : x.terms()) out.add(alpha_of(I), c);
      return out;
    }
    case Basis::Q: {
      CCombination out(Basis::L);
      for (const auto& [I, c] : x.terms()) {
        if (!is_superpermutation(I)) {
          throw std::domain_error("abelianize: Q -> L is defined on superpermutations only, got " +
                                  to_string(I));
        }
        out.add(gamma_of(I), c);
      }
      return out;
    }
    default: break;
  }
  throw std::invalid_argument("abelianize expects Mnc or Q input, got " + basis_name(x.basis()));
}

}  // namespace superhopf
