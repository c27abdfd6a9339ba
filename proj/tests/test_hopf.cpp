#include <doctest.h>

#include "superhopf/basis_change.hpp"
#include "superhopf/enumerate.hpp"
#include "superhopf/hopf.hpp"
#include "superhopf/output.hpp"

using namespace superhopf;

namespace {
SetSupercomposition S(std::string_view t) { return parse_set_supercomposition(t); }
DottedComposition D(std::string_view t) { return parse_dotted_composition(t); }
NcCombination nc(Basis b, std::string_view t) { return NcCombination::single(b, S(t)); }
}  // namespace

TEST_CASE("quasi-shuffles and super-shuffles") {
  CHECK(quasi_shuffles(S("{1,2}|{0}"), S("{0,2}|{1,3}")).size() == 12);
  CHECK(super_shuffles(S("{0,2}|{0,1,3}"), S("{0,1,2}|{0}")).size() == 6);
  CHECK(quasi_shuffles(S("e"), S("{1}")).size() == 1);
}

TEST_CASE("M product") {
  auto p = product_M(S("{1,2}|{0}"), S("{0,2}|{1,3}"));
  CHECK(p.size() == 12);
  CHECK(p.coefficient(S("{1,2}|{0}|{0,4}|{3,5}")) == 1);
  CHECK(p.coefficient(S("{0,1,2,4}|{0,3,5}")) == -1);
  CHECK(product_M(S("e"), S("{0}")) == nc(Basis::Mnc, "{0}"));
}

TEST_CASE("Q product and antipode") {
  auto p = product_Q(S("{0,2}|{0,1,3}"), S("{0,1,2}|{0}"));
  CHECK(p.size() == 6);
  CHECK(antipode(nc(Basis::Q, "{1}|{2}")) == nc(Basis::Q, "{2}|{1}"));
  CHECK(antipode(nc(Basis::Mnc, "{1}")) == -nc(Basis::Mnc, "{1}"));
  CHECK(counit(nc(Basis::Mnc, "e")) == 1);
  CHECK(counit(nc(Basis::Mnc, "{1}")) == 0);
}

TEST_CASE("coproducts") {
  CHECK(coproduct_m(S("{0,2,4}|{0,3}|{1}")).size() == 8);
  auto d = coproduct_MonF(S("{0,6}|{3}|{0,4,5}|{1}|{2}"));
  CHECK(d.size() == 4);
  CHECK(d.coefficient(S("e"), S("{0,6}|{3}|{0,4,5}|{1}|{2}")) == 1);
  CHECK(coproduct_M(S("e")).size() == 1);
}

TEST_CASE("change of basis") {
  auto m = change_basis(nc(Basis::m, "{0,2,4}|{0,3}|{1}"), Basis::Mnc);
  CHECK(m.size() == 6);
  CHECK(change_basis(m, Basis::m) == nc(Basis::m, "{0,2,4}|{0,3}|{1}"));
  CHECK(change_basis(nc(Basis::MonF, "{1}|{0,2}|{3}"), Basis::Q).size() == 4);
  CHECK_THROWS_AS(change_basis(nc(Basis::Mnc, "{2}|{1}"), Basis::m), ConversionError);
  auto l = change_basis(CCombination::single(Basis::L, D("(1,2,.0,1,.3,3)")), Basis::Mc);
  CHECK(l.size() == 8);
  auto [P, sign] = normalize_superpartition(S("{1}|{0,2}"));
  CHECK(to_string(P) == "{0,2}|{1}");
  CHECK(sign == 1);
}

TEST_CASE("commutative products") {
  auto L = product_L(D("(2,.1)"), D("(2)"));
  CHECK(L.size() == 14);
  CHECK(L.coefficient(D("(2,2,.1)")) == 2);
  CHECK(product_L_from(lift(D("(2,.1)")), lift(D("(2)"))) == L);
  CHECK(product_L_from(S("{1}|{3}|{0,2}"), S("{1}|{2}")) == L);
  auto M = product_Mc(D("(1)"), D("(1)"));
  CHECK(M.coefficient(D("(1,1)")) == 2);
  CHECK(M.coefficient(D("(2)")) == 1);
  CHECK(product_Mc(D("(.0)"), D("(.0)")).is_zero());
}

TEST_CASE("abelianization") {
  CHECK(abelianize(nc(Basis::Q, "{1}|{2}|{0,3}")) == CCombination::single(Basis::L, D("(2,.1)")));
  CHECK(abelianize(nc(Basis::Mnc, "{0}|{3,5}|{0,2,4}|{0,1}")) ==
        CCombination::single(Basis::Mc, D("(.0,2,.2,.1)")));
}

TEST_CASE("text and structured output") {
  auto x = nc(Basis::Q, "{1}|{2}");
  CHECK(to_text(x) == "+1 * Q[{1}|{2}]\n");
  CHECK(to_text(NcCombination(Basis::Q)) == "0\n");
  auto j = to_structured(x);
  CHECK(j.find("\"basis\":\"Q\"") != std::string::npos);
  CHECK(j.find("\"tensor\":false") != std::string::npos);
  auto t = to_text(coproduct(x));
  CHECK(t.find(" # ") != std::string::npos);
}
