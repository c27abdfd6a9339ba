#include "superhopf/hopf.hpp"
#include "superhopf/oracle.hpp"

namespace superhopf {

namespace {

template <class Index>
const Index& index_as(const AnyIndex& x, Basis basis) {
  if (const auto* p = std::get_if<Index>(&x)) return *p;
  throw std::invalid_argument("index kind does not match basis " + basis_name(basis));
}

using TensorPoly = std::map<std::pair<NcMonomial, NcMonomial>, Coeff>;

void add_term(TensorPoly& t, const NcMonomial& a, const NcMonomial& b, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

}  // namespace

bool verify_product(Basis basis, const AnyIndex& I, const AnyIndex& J, std::size_t N) {
  if (is_commutative(basis)) {
    const auto& a = index_as<DottedComposition>(I, basis);
    const auto& b = index_as<DottedComposition>(J, basis);
    auto lhs = multiply(expand(basis, a, N), expand(basis, b, N));
    auto rhs = expand(multiply(CCombination::single(basis, a), CCombination::single(basis, b)), N);
    return lhs == rhs;
  }
  const auto& a = index_as<SetSupercomposition>(I, basis);
  const auto& b = index_as<SetSupercomposition>(J, basis);
  auto lhs = multiply(expand(basis, a, N), expand(basis, b, N));
  auto rhs = expand(multiply(NcCombination::single(basis, a), NcCombination::single(basis, b)), N);
  return lhs == rhs;
}

std::map<std::pair<NcMonomial, NcMonomial>, Coeff> split_doubled(const NcPoly& f, std::size_t N) {
  TensorPoly out;
  const Value n = static_cast<Value>(N);
  for (const auto& [u, c] : f.terms) {
    NcMonomial left, right;
    // Left thetas are all smaller than right ones, so no reordering sign arises.
    for (Value t : u.thetas) (t <= n ? left.thetas : right.thetas).push_back(t <= n ? t : t - n);
    for (Value x : u.word) (x <= n ? left.word : right.word).push_back(x <= n ? x : x - n);
    add_term(out, left, right, c);
  }
  return out;
}

bool verify_coproduct(Basis basis, const SetSupercomposition& I, std::size_t N) {
  auto lhs = split_doubled(expand(basis, I, 2 * N), N);
  TensorPoly rhs;
  const NcTensor delta = coproduct(NcCombination::single(basis, I));
  for (const auto& [key, c] : delta.terms()) {
    auto fa = expand(basis, key.first, N);
    auto fb = expand(basis, key.second, N);
    for (const auto& [u, a] : fa.terms) {
      for (const auto& [v, b] : fb.terms) add_term(rhs, u, v, c * a * b);
    }
  }
  return lhs == rhs;
}

}  // namespace superhopf
