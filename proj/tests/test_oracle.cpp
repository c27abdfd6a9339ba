#include <doctest.h>

#include <random>

#include "random_indices.hpp"
#include "superhopf/hopf.hpp"
#include "superhopf/kernels.hpp"
#include "superhopf/oracle.hpp"

using namespace superhopf;

namespace {
SetSupercomposition S(std::string_view t) { return parse_set_supercomposition(t); }
DottedComposition D(std::string_view t) { return parse_dotted_composition(t); }
}  // namespace

TEST_CASE("monomial text roundtrip") {
  for (const char* t : {"t2 t5 x3^3 x4 x5^2 x7", "1", "t1"}) CHECK(to_string(parse_c_monomial(t)) == t);
  for (const char* t : {"t2 t8 | x7 x2 x7 x5", "| x1", "t3 |"}) {
    auto u = parse_nc_monomial(t);
    CHECK(parse_nc_monomial(to_string(u)) == u);
  }
}

TEST_CASE("normal form multiplication is associative") {
  // Every theta support up to size 3 inside [4], split over three factors.
  std::vector<NcMonomial> pool;
  for (unsigned mask = 0; mask < 16; ++mask) {
    NcMonomial u;
    for (Value i = 0; i < 4; ++i) {
      if (mask >> i & 1) u.thetas.push_back(i + 1);
    }
    if (u.thetas.size() > 3) continue;
    u.word = {static_cast<Value>(mask % 3 + 1)};
    pool.push_back(u);
  }
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      for (const auto& c : pool) {
        auto ab = mono_mul(a, b);
        auto bc = mono_mul(b, c);
        std::optional<std::pair<NcMonomial, int>> left, right;
        if (ab) {
          left = mono_mul(ab->first, c);
          if (left) left->second *= ab->second;
        }
        if (bc) {
          right = mono_mul(a, bc->first);
          if (right) right->second *= bc->second;
        }
        REQUIRE(left.has_value() == right.has_value());
        if (left) CHECK(*left == *right);
      }
    }
  }
  auto sq = mono_mul(parse_nc_monomial("t1 | x1"), parse_nc_monomial("t1 | x2"));
  CHECK_FALSE(sq.has_value());
  auto anti = mono_mul(parse_nc_monomial("t2 |"), parse_nc_monomial("t1 |"));
  REQUIRE(anti.has_value());
  CHECK(anti->second == -1);
}

TEST_CASE("standardization") {
  auto [s, I] = std_and_I(parse_nc_monomial("t2 t8 | x7 x2 x7 x5 x9 x2 x5 x7"));
  CHECK(to_string(s) == "t1 t4 | x3 x1 x3 x2 x5 x1 x2 x3");
  CHECK(to_string(I) == "{0,2,6}|{4,7}|{1,3,8}|{0}|{5}");
  auto [s2, I2] = std_and_I(s);
  CHECK(s2 == s);
  CHECK(I2 == I);
}

TEST_CASE("quasisymmetrizing action") {
  CHECK(to_string(qs_action({5, 3, 2}, parse_c_monomial("t2 t5 x3^3 x4 x5^2 x7"), 9)) == "t2 t6 x3^3 x4 x6^2 x7");
  CHECK(to_string(qs_action({4, 3, 6, 1}, parse_nc_monomial("t2 t4 | x3 x3 x2 x6 x3 x2 x6"), 9)) ==
        "t1 t5 | x3 x3 x1 x7 x3 x1 x7");
  CHECK_THROWS_AS(qs_action({3}, parse_c_monomial("x3"), 3), std::out_of_range);
  CHECK(check_invariance(expand(Basis::Mc, D("(.1,2)"), 5), 3));
  CHECK(check_invariance(expand(Basis::Mnc, S("{1}|{2}"), 5), 3));
  CPoly x1(3);
  x1.add(parse_c_monomial("x1"), 1);
  CHECK_FALSE(check_invariance(x1, 2));
}

TEST_CASE("oracle agrees with the formulas") {
  CHECK(verify_product(Basis::Mnc, S("{1,2}|{0}"), S("{0,2}|{1,3}"), 6));
  CHECK(verify_product(Basis::Q, S("{0,2}|{0,1,3}"), S("{0,1,2}|{0}"), 6));
  CHECK(verify_product(Basis::Mnc, S("e"), S("e"), 1));
  CHECK(verify_product(Basis::L, D("(2,.1)"), D("(1)"), 4));
  CHECK(verify_coproduct(Basis::Mnc, S("{0,2}|{1}"), 3));
  CHECK(verify_coproduct(Basis::Q, S("{1}|{2}"), 3));
  CHECK(verify_coproduct(Basis::Mnc, S("e"), 1));
  auto f = expand(Basis::Mnc, S("{2,4}|{0,1,5}|{0,3}"), 4);
  CHECK(f.terms.at(parse_nc_monomial("t2 t3 | x2 x1 x3 x1 x2")) == 1);
}

TEST_CASE("commutative image of the noncommutative expansion") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto I = test_support::random_sc(rng, 4, 2);
    const std::size_t N = I.length() + 1;
    CHECK(commutative_image(expand(Basis::Mnc, I, N)) ==
          expand(abelianize(NcCombination::single(Basis::Mnc, I)), N));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    auto I = test_support::random_sc(rng, 4, 2);
    auto P = test_support::random_superpartition(rng);
    const std::size_t N = 6;
    auto a = kernels::expand_M_serial(I, N);
    CHECK(a == kernels::expand_M_parallel(I, N));
    if (P.length() <= N) CHECK(kernels::expand_m_serial(P, N) == kernels::expand_m_parallel(P, N));
    auto b = kernels::expand_M_serial(test_support::random_sc(rng, 3, 1), N);
    CHECK(kernels::multiply_serial(a, b) == kernels::multiply_parallel(a, b));
    auto ca = commutative_image(a), cb = commutative_image(b);
    CHECK(kernels::multiply_serial(ca, cb) == kernels::multiply_parallel(ca, cb));
  }
}
