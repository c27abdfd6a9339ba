// Formula-versus-polynomial checks and the quasisymmetrizing action.

#include <algorithm>
#include <numeric>

#include "superhopf/hopf.hpp"
#include "superhopf/oracle.hpp"
#include "verify_internal.hpp"

namespace superhopf::detail {

namespace {

// Products then reach 8 blocks, the largest alphabet used.
constexpr std::size_t kOracleIndexSize = 4;

std::string label(Basis b, const AnyIndex& x) {
  return basis_name(b) + "[" + std::visit([](const auto& v) { return to_string(v); }, x) + "]";
}

std::size_t blocks(const AnyIndex& x) {
  return std::visit([](const auto& v) { return v.length(); }, x);
}

void products(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  struct Plan {
    Basis basis;
    std::size_t samples;
  };
  const Plan plans[] = {{Basis::Mnc, o.product_samples},     {Basis::Q, o.product_samples},
                        {Basis::m, o.product_samples},       {Basis::MonF, o.product_samples / 4},
                        {Basis::Mc, o.product_samples / 4},  {Basis::L, o.product_samples / 4}};
  for (const auto& [b, n] : plans) {
    for (std::size_t t = 0; t < n; ++t) {
      AnyIndex I, J;
      if (is_commutative(b)) {
        I = s.random_composition(kOracleIndexSize);
        J = s.random_composition(kOracleIndexSize);
      } else {
        I = s.random_index(b, kOracleIndexSize);
        J = s.random_index(b, kOracleIndexSize);
      }
      const std::size_t N = std::max<std::size_t>(1, blocks(I) + blocks(J));
      r.record(verify_product(b, I, J, N), "product oracle mismatch at " + label(b, I) + " * " + label(b, J) +
                                               " N=" + std::to_string(N));
      if (b == Basis::Mnc) {
        const auto& a = std::get<SetSupercomposition>(I);
        const auto& c = std::get<SetSupercomposition>(J);
        r.record(abelianize(product_M(a, c)) == product_Mc(alpha_of(a), alpha_of(c)),
                 "pi(M_I M_J) != pi(M_I) pi(M_J) at " + label(b, I) + ", " + label(b, J));
        auto lhs = commutative_image(expand(Basis::Mnc, a, N));
        auto rhs = expand(abelianize(NcCombination::single(Basis::Mnc, a)), N);
        r.record(lhs == rhs, "commutative image of expansion differs at " + label(b, I));
      }
    }
  }
  r.record(verify_product(Basis::Mnc, SetSupercomposition(), SetSupercomposition(), 1), "e * e");
  r.record(verify_coproduct(Basis::Mnc, SetSupercomposition(), 1), "Delta(e)");
}

void coproducts(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (Basis b : {Basis::Mnc, Basis::Q, Basis::m, Basis::MonF}) {
    const std::size_t n = b == Basis::Mnc ? o.coproduct_samples : o.coproduct_samples / 4;
    for (std::size_t t = 0; t < n; ++t) {
      auto I = s.random_index(b, 4);
      const std::size_t N = std::max<std::size_t>(1, I.length());
      r.record(verify_coproduct(b, I, N), "coproduct oracle mismatch at " + label(b, I) + " N=" + std::to_string(N));
    }
  }
}

}  // namespace

SuiteReport oracle_products(const VerifyOptions& o) {
  SuiteReport r;
  Sampler s(o.seed);
  products(r, o, s);
  coproducts(r, o, s);
  return r;
}

namespace {

constexpr std::size_t kActionN = 7;

std::vector<Value> random_subset(Sampler& s, std::size_t k, std::size_t N) {
  std::vector<Value> all(N);
  std::iota(all.begin(), all.end(), Value{1});
  std::shuffle(all.begin(), all.end(), s.rng());
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Value> random_gens(Sampler& s, std::size_t len, std::size_t N) {
  std::vector<Value> g(len);
  for (auto& x : g) x = static_cast<Value>(s.uniform(1, N - 1));
  return g;
}

NcMonomial random_nc(Sampler& s) {
  NcMonomial u;
  u.thetas = random_subset(s, s.uniform(0, 3), kActionN);
  u.word.resize(s.uniform(0, 5));
  for (auto& x : u.word) x = static_cast<Value>(s.uniform(1, kActionN));
  return u;
}

CMonomial random_c(Sampler& s) {
  CMonomial u;
  u.thetas = random_subset(s, s.uniform(0, 3), kActionN);
  u.exponents.resize(kActionN);
  for (auto& e : u.exponents) e = s.uniform(0, 3) == 0 ? static_cast<Value>(s.uniform(1, 3)) : 0;
  while (!u.exponents.empty() && u.exponents.back() == 0) u.exponents.pop_back();
  return u;
}

template <class Mono>
void coxeter(SuiteReport& r, const Mono& u, Value i, Value j, const std::string& kind) {
  auto act = [&](std::vector<Value> g) { return qs_action(g, u, kActionN); };
  const std::string at = kind + " " + to_string(u) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
  r.record(act({i, i}) == u, "s_i^2 != id on " + at);
  if (i + 1 < kActionN) r.record(act({i, i + 1, i}) == act({i + 1, i, i + 1}), "braid relation fails on " + at);
  if (i > j + 1 || j > i + 1) r.record(act({i, j}) == act({j, i}), "far generators do not commute on " + at);
}

void relations(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (std::size_t t = 0; t < o.random_pairs * 4; ++t) {
    auto i = static_cast<Value>(s.uniform(1, kActionN - 1));
    auto j = static_cast<Value>(s.uniform(1, kActionN - 1));
    coxeter(r, random_nc(s), i, j, "word");
    coxeter(r, random_c(s), i, j, "commutative");
  }
}

void orbits(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  for (std::size_t t = 0; t < o.random_pairs * 2; ++t) {
    auto gens = random_gens(s, s.uniform(0, 6), kActionN);
    auto I = s.random_index(Basis::Mnc, 5);
    auto A = random_subset(s, I.length(), kActionN);
    r.record(qs_action(gens, monomial_AI(A, I), kActionN) == monomial_AI(permute_set(gens, A), I),
             "orbit formula fails for I=" + to_string(I));
    auto alpha = s.random_composition(5);
    auto B = random_subset(s, alpha.length(), kActionN);
    r.record(qs_action(gens, monomial_Aalpha(B, alpha), kActionN) == monomial_Aalpha(permute_set(gens, B), alpha),
             "orbit formula fails for alpha=" + to_string(alpha));
  }
}

void examples(SuiteReport& r) {
  expect_equal(r, "commutative action", to_string(qs_action({5, 3, 2}, parse_c_monomial("t2 t5 x3^3 x4 x5^2 x7"), 9)),
               "t2 t6 x3^3 x4 x6^2 x7");
  expect_equal(r, "noncommutative action",
               to_string(qs_action({4, 3, 6, 1}, parse_nc_monomial("t2 t4 | x3 x3 x2 x6 x3 x2 x6"), 9)),
               "t1 t5 | x3 x3 x1 x7 x3 x1 x7");
}

void invariance(SuiteReport& r, const VerifyOptions& o, Sampler& s) {
  const std::size_t top = std::min<std::size_t>(o.max_size, 3);
  for (std::size_t size = 0; size <= top; ++size) {
    for (Basis b : {Basis::Mnc, Basis::Q, Basis::m, Basis::MonF}) {
      for (const auto& I : s.indices(b, size)) {
        const std::size_t N = I.length() + 2;
        r.record(check_invariance(expand(b, I, N), N - 1), "expansion not invariant: " + label(b, I));
      }
    }
    for (Basis b : {Basis::Mc, Basis::L}) {
      for (const auto& a : s.compositions(size)) {
        const std::size_t N = a.length() + 2;
        r.record(check_invariance(expand(b, a, N), N - 1), "expansion not invariant: " + label(b, a));
      }
    }
  }
  CPoly planted(3);
  planted.add(parse_c_monomial("x1"), 1);
  r.record(!check_invariance(planted, 2), "x1 reported invariant");
  NcPoly planted_nc(3);
  planted_nc.add(parse_nc_monomial("| x1 x2"), 1);
  r.record(!check_invariance(planted_nc, 2), "x1 x2 reported invariant");
}

}  // namespace

SuiteReport actions(const VerifyOptions& o) {
  SuiteReport r;
  Sampler s(o.seed);
  relations(r, o, s);
  orbits(r, o, s);
  examples(r);
  invariance(r, o, s);
  return r;
}

}  // namespace superhopf::detail
