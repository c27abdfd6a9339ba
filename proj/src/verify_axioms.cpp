// Hopf superalgebra axioms checked on exhaustive and random index samples.

#include <algorithm>
#include <tuple>

#include "superhopf/basis_change.hpp"
#include "superhopf/enumerate.hpp"
#include "superhopf/hopf.hpp"
#include "superhopf/text.hpp"
#include "verify_internal.hpp"

namespace superhopf::detail {

namespace {

constexpr Basis kNcBases[] = {Basis::Mnc, Basis::Q, Basis::m, Basis::MonF};

using Triple = std::map<std::tuple<SetSupercomposition, SetSupercomposition, SetSupercomposition>, Coeff>;

void add3(Triple& t, const SetSupercomposition& a, const SetSupercomposition& b, const SetSupercomposition& c,
          const Coeff& v) {
  if (v == 0) return;
  auto [it, inserted] = t.try_emplace({a, b, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) t.erase(it);
  }
}

std::string label(Basis b, const SetSupercomposition& I) { return basis_name(b) + "[" + to_string(I) + "]"; }

bool coassociative(Basis b, const SetSupercomposition& I) {
  const NcTensor d = coproduct(NcCombination::single(b, I));
  Triple left, right;
  for (const auto& [key, k] : d.terms()) {
    const NcTensor da = coproduct(NcCombination::single(b, key.first));
    for (const auto& [k2, v] : da.terms()) add3(left, k2.first, k2.second, key.second, k * v);
    const NcTensor dc = coproduct(NcCombination::single(b, key.second));
    for (const auto& [k2, v] : dc.terms()) add3(right, key.first, k2.first, k2.second, k * v);
  }
  return left == right;
}

bool counital(Basis b, const SetSupercomposition& I) {
  const auto x = NcCombination::single(b, I);
  const NcTensor d = coproduct(x);
  NcCombination left(b), right(b);
  for (const auto& [key, k] : d.terms()) {
    if (key.first.empty()) left.add(key.second, k);
    if (key.second.empty()) right.add(key.first, k);
  }
  return left == x && right == x;
}

bool antipode_axiom(Basis b, const SetSupercomposition& I) {
  const auto x = NcCombination::single(b, I);
  NcCombination unit(b);
  unit.add(SetSupercomposition(), counit(x));
  const NcTensor d = coproduct(x);
  NcCombination left(b), right(b);
  for (const auto& [key, k] : d.terms()) {
    auto sa = antipode(NcCombination::single(b, key.first));
    auto sc = antipode(NcCombination::single(b, key.second));
    left.add_scaled(multiply(sa, NcCombination::single(b, key.second)), k);
    right.add_scaled(multiply(NcCombination::single(b, key.first), sc), k);
  }
  return left == unit && right == unit;
}

bool compatible(Basis b, const SetSupercomposition& I, const SetSupercomposition& J) {
  auto x = NcCombination::single(b, I);
  auto y = NcCombination::single(b, J);
  return coproduct(multiply(x, y)) == super_tensor_mul(coproduct(x), coproduct(y));
}

bool graded(const NcCombination& product, const SetSupercomposition& I, const SetSupercomposition& J) {
  auto a = I.bidegree();
  auto c = J.bidegree();
  for (const auto& [K, v] : product.terms()) {
    auto k = K.bidegree();
    if (k.n != a.n + c.n || k.m != a.m + c.m) return false;
  }
  return true;
}

template <class Index>
bool associative(Basis b, const Index& I, const Index& J, const Index& K) {
  auto x = Combination<Index>::single(b, I);
  auto y = Combination<Index>::single(b, J);
  auto z = Combination<Index>::single(b, K);
  return multiply(multiply(x, y), z) == multiply(x, multiply(y, z));
}

void single_index_axioms(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (Basis b : kNcBases) {
    for (std::size_t size = 0; size <= o.max_size; ++size) {
      for (const auto& I : s.indices(b, size)) {
        r.record(counital(b, I), "counit axiom fails at " + label(b, I));
        r.record(coassociative(b, I), "coassociativity fails at " + label(b, I));
        r.record(antipode_axiom(b, I), "antipode axiom fails at " + label(b, I));
      }
    }
  }
}

void pair_axioms(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (Basis b : kNcBases) {
    for (std::size_t s1 = 0; s1 <= o.max_size; ++s1) {
      for (std::size_t s2 = 0; s1 + s2 <= o.max_size; ++s2) {
        for (const auto& I : s.indices(b, s1)) {
          for (const auto& J : s.indices(b, s2)) {
            auto p = multiply(NcCombination::single(b, I), NcCombination::single(b, J));
            r.record(graded(p, I, J), "product not graded at " + label(b, I) + " * " + label(b, J));
            r.record(compatible(b, I, J), "Delta(ab) != Delta(a)Delta(b) at " + label(b, I) + " * " + label(b, J));
          }
        }
      }
    }
    // Random pairs one size up.
    for (std::size_t t = 0; t < o.random_pairs; ++t) {
      auto I = s.random_index(b, o.max_size);
      auto J = s.random_index(b, o.max_size + 1 - I.total_size() > 0 ? o.max_size + 1 - I.total_size() : 1);
      r.record(compatible(b, I, J), "Delta(ab) != Delta(a)Delta(b) at " + label(b, I) + " * " + label(b, J));
    }
  }
}

void triple_axioms(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  const std::size_t total = o.max_size + 1;
  auto budget = [&](std::size_t used) { return total > used + 1 ? total - used - 1 : 1; };
  for (Basis b : kNcBases) {
    for (std::size_t t = 0; t < o.random_triples; ++t) {
      auto I = s.random_index(b, total - 2);
      auto J = s.random_index(b, budget(I.total_size()));
      auto K = s.random_index(b, total > I.total_size() + J.total_size() ? total - I.total_size() - J.total_size() : 1);
      r.record(associative(b, I, J, K), "associativity fails at " + label(b, I) + ", " + label(b, J) + ", " + label(b, K));
    }
  }
  for (Basis b : {Basis::Mc, Basis::L}) {
    for (std::size_t t = 0; t < o.random_triples; ++t) {
      auto a = s.random_composition(total - 2);
      auto c = s.random_composition(budget(a.total_size()));
      auto d = s.random_composition(total > a.total_size() + c.total_size() ? total - a.total_size() - c.total_size() : 1);
      r.record(associative(b, a, c, d), "associativity fails at " + basis_name(b) + "[" + to_string(a) + "], [" +
                                            to_string(c) + "], [" + to_string(d) + "]");
    }
  }
}

void conversions(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (std::size_t size = 0; size <= o.max_size; ++size) {
    for (const auto& I : s.indices(Basis::Mnc, size)) {
      auto x = NcCombination::single(Basis::Mnc, I);
      r.record(change_basis(change_basis(x, Basis::Q), Basis::Mnc) == x, "Mnc -> Q -> Mnc at " + to_string(I));
    }
    for (const auto& I : s.indices(Basis::MonF, size)) {
      auto x = NcCombination::single(Basis::Q, I);
      r.record(change_basis(change_basis(x, Basis::MonF), Basis::Q) == x, "Q -> MonF -> Q at " + to_string(I));
    }
    for (const auto& I : s.indices(Basis::m, size)) {
      auto x = NcCombination::single(Basis::m, I);
      r.record(change_basis(change_basis(x, Basis::Mnc), Basis::m) == x, "m -> Mnc -> m at " + to_string(I));
    }
    for (const auto& a : s.compositions(size)) {
      auto x = CCombination::single(Basis::L, a);
      r.record(change_basis(change_basis(x, Basis::Mc), Basis::L) == x, "L -> Mc -> L at " + to_string(a));
    }
  }
}

void abelianization(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (std::size_t s1 = 0; s1 <= o.max_size; ++s1) {
    for (std::size_t s2 = 0; s1 + s2 <= o.max_size; ++s2) {
      for (const auto& I : s.indices(Basis::Mnc, s1)) {
        for (const auto& J : s.indices(Basis::Mnc, s2)) {
          auto lhs = abelianize(product_M(I, J));
          auto rhs = product_Mc(alpha_of(I), alpha_of(J));
          r.record(lhs == rhs, "pi(M_I M_J) != pi(M_I) pi(M_J) at " + to_string(I) + ", " + to_string(J));
        }
      }
      // Products and coproducts of superpermutations stay superpermutations.
      for (const auto& I : s.indices(Basis::MonF, s1)) {
        for (const auto& J : s.indices(Basis::MonF, s2)) {
          bool closed = true;
          for (const auto& [K, v] : product_Q(I, J).terms()) closed = closed && is_superpermutation(K);
          r.record(closed, "Q product leaves superpermutations at " + to_string(I) + ", " + to_string(J));
        }
      }
    }
    for (const auto& I : s.indices(Basis::MonF, s1)) {
      bool closed = true;
      for (const auto& [key, v] : coproduct_Q(I).terms()) {
        closed = closed && is_superpermutation(key.first) && is_superpermutation(key.second);
      }
      r.record(closed, "Q coproduct leaves superpermutations at " + to_string(I));
    }
  }
}

// The L product must not depend on which superpermutations represent alpha, beta.
void representatives(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (std::size_t s1 = 1; s1 <= o.max_size; ++s1) {
    for (std::size_t s2 = 1; s1 + s2 <= o.max_size; ++s2) {
      for (const auto& a : s.compositions(s1)) {
        for (const auto& c : s.compositions(s2)) {
          auto fa = gamma_fiber(a);
          auto fc = gamma_fiber(c);
          const auto reference = product_L(a, c);
          for (std::size_t i = 0; i < std::min<std::size_t>(3, fa.size()); ++i) {
            for (std::size_t j = 0; j < std::min<std::size_t>(3, fc.size()); ++j) {
              r.record(product_L_from(fa[i], fc[j]) == reference,
                       "L product depends on representatives " + to_string(fa[i]) + ", " + to_string(fc[j]));
            }
          }
        }
      }
    }
  }
}

}  // namespace

SuiteReport hopf_axioms(const VerifyOptions& o) {
  SuiteReport r;
  Sampler s(o.seed);
  single_index_axioms(r, o, s);
  pair_axioms(r, o, s);
  triple_axioms(r, o, s);
  conversions(r, o, s);
  abelianization(r, o, s);
  representatives(r, o, s);
  return r;
}

}  // namespace superhopf::detail
