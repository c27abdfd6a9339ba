// Worked examples with known answers, compared byte for byte.

#include "superhopf/basis_change.hpp"
#include "superhopf/hopf.hpp"
#include "superhopf/oracle.hpp"
#include "superhopf/output.hpp"
#include "superhopf/posets.hpp"
#include "verify_internal.hpp"

namespace superhopf::detail {

namespace {

SetSupercomposition S(std::string_view t) { return parse_set_supercomposition(t); }
DottedComposition D(std::string_view t) { return parse_dotted_composition(t); }

std::string set_text(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void combinatorics(SuiteReport& r) {
  auto bd = S("{0,1,3}|{4}|{0}|{0,2}").bidegree();
  expect_equal(r, "bidegree", std::to_string(bd.n) + "," + std::to_string(bd.m), "4,3");
  expect_equal(r, "shift", to_string(shift(S("{0,2}|{1}").blocks(), 3)), "{0,5}|{4}");
  expect_equal(r, "shift 2", to_string(shift(S("{0,1,3}|{2}").blocks(), 2)), "{0,3,5}|{4}");
  expect_equal(r, "standardize", to_string(standardize(parse_block_sequence("{0,6}|{3}|{0,4,5}"))),
               "{0,4}|{1}|{0,2,3}");
  expect_equal(r, "alpha", to_string(alpha_of(S("{0}|{3,5}|{0,2,4}|{0,1}"))), "(.0,2,.2,.1)");
  expect_equal(r, "gamma", to_string(gamma_of(S("{0,1,8}|{2}|{5}|{3}|{0}|{6}|{4}|{7}"))),
               "(.2,2,1,.0,1,2)");
  expect_equal(r, "gamma 21", to_string(gamma_of(S("{2}|{1}"))), "(1,1)");
  auto w = w_of(S("{3}|{0,1,5}|{4}|{0}|{2}"));
  expect_equal(r, "w", word_to_string(w), "3 1 5 4 2");
  expect_equal(r, "global descents", set_text(global_descents(S("{0,6}|{3}|{0,4,5}|{1}|{2}"))), "{0,1,3,5}");
  expect_equal(r, "lift (2,.1)", to_string(lift(D("(2,.1)"))), "{1}|{2}|{0,3}");
  expect_equal(r, "lift (1,1)", to_string(lift(D("(1,1)"))), "{2}|{1}");
  bool rejected = false;
  try {
    S("{0,4,5}|{1}|{3}|{2}|{0}|{7}|{5}|{6}");
  } catch (const AxiomError&) {
    rejected = true;
  }
  r.record(rejected, "index with a repeated element must be rejected");
}

void orders(SuiteReport& r) {
  r.record(dotted_leq(D("(1,1,1,.0,1,.3,1,1,1)"), D("(1,2,.0,1,.3,3)")), "dotted_leq bottom");
  r.record(!dotted_leq(D("(.1)"), D("(1)")), "dotted vs plain");
  auto down = dotted_downset(D("(1,2,.0,1,.3,3)"));
  expect_equal(r, "downset size", std::to_string(down.size()), "8");
  r.record(sc_leq(S("{10}|{3}|{4}|{0}|{9}|{0,1,5,7}|{2}|{6}|{8}"), S("{10}|{3,4}|{0}|{9}|{0,1,5,7}|{2,6,8}")),
           "sc_leq top");
  r.record(!sc_leq(S("{2}|{1}"), S("{1,2}")), "sc_leq blocked merge");
  expect_equal(r, "upset size", std::to_string(sc_upset(S("{10}|{3}|{4}|{0}|{9}|{0,1,5,7}|{2}|{6}|{8}")).size()),
               "8");
  expect_lines(r, "upset images",
               [&] {
                 std::string s;
                 for (const auto& J : sc_upset(S("{0}|{1}|{2}|{4}|{0,3}")).elements) {
                   s += to_string(alpha_of(J)) + "\n";
                 }
                 return s;
               }(),
               {"(.0,3,.1)", "(.0,2,1,.1)", "(.0,1,2,.1)", "(.0,1,1,1,.1)"});
  r.record(weak_leq(S("{1}|{0,2}|{3}"), S("{3}|{0,2}|{1}")), "weak_leq");
  r.record(!weak_leq(S("{1}|{2}"), S("{0,1}|{2}")), "weak_leq across fibers");
  auto [lo, hi] = fiber_bounds(D("(1,.1,1)"));
  expect_equal(r, "fiber bounds", to_string(lo) + " " + to_string(hi), "{1}|{0,2}|{3} {3}|{0,2}|{1}");
  auto hex = weak_interval(lo, hi);
  expect_equal(r, "hexagon", std::to_string(hex.size()) + "/" + std::to_string(hex.covers.size()), "6/6");
  expect_equal(r, "mobius top", std::to_string(mobius_weak(lo, hi)), "1");
  expect_equal(r, "mobius 231", std::to_string(mobius_weak(lo, S("{2}|{0,3}|{1}"))), "0");
}

void products(SuiteReport& r) {
  expect_lines(r, "product M", to_text(product_M(S("{1,2}|{0}"), S("{0,2}|{1,3}"))),
               {"+1 * Mnc[{1,2}|{0}|{0,4}|{3,5}]", "-1 * Mnc[{1,2}|{0,4}|{0}|{3,5}]",
                "-1 * Mnc[{0,1,2,4}|{0}|{3,5}]", "-1 * Mnc[{1,2}|{0,4}|{0,3,5}]", "-1 * Mnc[{0,1,2,4}|{0,3,5}]",
                "-1 * Mnc[{0,4}|{1,2}|{0}|{3,5}]", "-1 * Mnc[{0,4}|{1,2}|{0,3,5}]",
                "-1 * Mnc[{1,2}|{0,4}|{3,5}|{0}]", "-1 * Mnc[{0,1,2,4}|{3,5}|{0}]",
                "-1 * Mnc[{0,4}|{1,2}|{3,5}|{0}]", "-1 * Mnc[{0,4}|{1,2,3,5}|{0}]",
                "-1 * Mnc[{0,4}|{3,5}|{1,2}|{0}]"});
  expect_lines(r, "product Q", to_text(product_Q(S("{0,2}|{0,1,3}"), S("{0,1,2}|{0}"))),
               {"+1 * Q[{0,2}|{0,1,3}|{0,4,5}|{0}]", "-1 * Q[{0,2}|{0,4,5}|{0,1,3}|{0}]",
                "+1 * Q[{0,2}|{0,4,5}|{0}|{0,1,3}]", "+1 * Q[{0,4,5}|{0,2}|{0,1,3}|{0}]",
                "-1 * Q[{0,4,5}|{0,2}|{0}|{0,1,3}]", "+1 * Q[{0,4,5}|{0}|{0,2}|{0,1,3}]"});
  // Merger-free quasi-shuffles are the plain shuffles.
  std::string shuffles;
  for (const auto& t : quasi_shuffles(S("{0}|{0,1}"), S("{0,1,3}|{2}"))) {
    if (t.index.length() == 4) shuffles += to_string(t.index) + "\n";
  }
  expect_lines(r, "shuffles", shuffles,
               {"{0}|{0,1}|{0,2,4}|{3}", "{0}|{0,2,4}|{0,1}|{3}", "{0,2,4}|{0}|{0,1}|{3}",
                "{0}|{0,2,4}|{3}|{0,1}", "{0,2,4}|{0}|{3}|{0,1}", "{0,2,4}|{3}|{0}|{0,1}"});
  std::vector<std::string> want = {"{2,4}|{0,1}|{6}|{3}|{5}|{0}", "{2,4}|{0,1,6}|{3}|{5}|{0}",
                                   "{2,4}|{0,1}|{6}|{3}|{0,5}",   "{2,4}|{0,1}|{6}|{0,3,5}",
                                   "{2,4}|{0,1,6}|{3}|{0,5}",     "{2,4}|{0,1,6}|{0,3,5}"};
  auto ssh = super_shuffles(S("{2,4}|{0,1}|{3}|{5}"), S("{1}|{0}"));
  for (const auto& k : want) {
    bool found = std::any_of(ssh.begin(), ssh.end(), [&](const SignedIndex& t) {
      return to_string(t.index) == k && t.sign == 1;
    });
    r.record(found, "super-shuffle " + k + " with sign +1");
  }
}

void other_bases(SuiteReport& r) {
  expect_lines(r, "m to Mnc",
               to_text(change_basis(NcCombination::single(Basis::m, S("{0,2,4}|{0,3}|{1}")), Basis::Mnc)),
               {"+1 * Mnc[{0,2,4}|{0,3}|{1}]", "+1 * Mnc[{0,2,4}|{1}|{0,3}]", "-1 * Mnc[{0,3}|{0,2,4}|{1}]",
                "-1 * Mnc[{0,3}|{1}|{0,2,4}]", "+1 * Mnc[{1}|{0,2,4}|{0,3}]", "-1 * Mnc[{1}|{0,3}|{0,2,4}]"});
  // Every admissible fusion of ({0},{0,3},{1,2}) with ({0,5},{4}), normalized.
  expect_lines(r, "product m", to_text(product_m(S("{0}|{0,3}|{1,2}"), S("{0,2}|{1}"))),
               {"+1 * m[{0}|{0,3}|{0,5}|{1,2}|{4}]", "-1 * m[{0,3}|{0,4}|{0,5}|{1,2}]",
                "+1 * m[{0}|{0,3,4}|{0,5}|{1,2}]", "+1 * m[{0}|{0,3}|{0,5}|{1,2,4}]",
                "-1 * m[{0}|{0,1,2,5}|{0,3}|{4}]", "-1 * m[{0,1,2,5}|{0,3}|{0,4}]",
                "-1 * m[{0}|{0,1,2,5}|{0,3,4}]"});
  expect_lines(r, "coproduct m", to_text(coproduct_m(S("{0,2,4}|{0,3}|{1}"))),
               {"+1 * m[e] # m[{0,2,4}|{0,3}|{1}]", "+1 * m[{0,1,2}] # m[{0,2}|{1}]",
                "-1 * m[{0,1}] # m[{0,2,3}|{1}]", "+1 * m[{1}] # m[{0,1,3}|{0,2}]",
                "+1 * m[{0,1,3}|{0,2}] # m[{1}]", "+1 * m[{0,2,3}|{1}] # m[{0,1}]",
                "-1 * m[{0,2}|{1}] # m[{0,1,2}]", "+1 * m[{0,2,4}|{0,3}|{1}] # m[e]"});
  expect_lines(r, "MonF to Q",
               to_text(change_basis(NcCombination::single(Basis::MonF, S("{1}|{0,2}|{3}")), Basis::Q)),
               {"+1 * Q[{1}|{0,2}|{3}]", "-1 * Q[{2}|{0,1}|{3}]", "-1 * Q[{1}|{0,3}|{2}]", "+1 * Q[{3}|{0,2}|{1}]"});
  expect_lines(r, "coproduct MonF", to_text(coproduct_MonF(S("{0,6}|{3}|{0,4,5}|{1}|{2}"))),
               {"+1 * MonF[e] # MonF[{0,6}|{3}|{0,4,5}|{1}|{2}]", "+1 * MonF[{0,1}] # MonF[{3}|{0,4,5}|{1}|{2}]",
                "+1 * MonF[{0,4}|{1}|{0,2,3}] # MonF[{1}|{2}]", "+1 * MonF[{0,6}|{3}|{0,4,5}|{1}|{2}] # MonF[e]"});
  expect_lines(r, "product L", to_text(product_L(D("(2,.1)"), D("(2)"))),
               {"+1 * L[(2,.1,2)]", "+1 * L[(2,.2,1)]", "+1 * L[(2,.3)]", "+1 * L[(3,.1,1)]", "+1 * L[(3,.2)]",
                "+1 * L[(2,1,.1,1)]", "+1 * L[(2,1,.2)]", "+1 * L[(1,2,.1,1)]", "+1 * L[(1,2,.2)]",
                "+1 * L[(4,.1)]", "+2 * L[(2,2,.1)]", "+1 * L[(3,1,.1)]", "+1 * L[(1,3,.1)]",
                "+1 * L[(1,2,1,.1)]"});
  expect_lines(r, "L to Mc",
               to_text(change_basis(CCombination::single(Basis::L, D("(1,2,.0,1,.3,3)")), Basis::Mc)),
               {"+1 * Mc[(1,2,.0,1,.3,3)]", "+1 * Mc[(1,2,.0,1,.3,2,1)]", "+1 * Mc[(1,2,.0,1,.3,1,2)]",
                "+1 * Mc[(1,1,1,.0,1,.3,3)]", "+1 * Mc[(1,2,.0,1,.3,1,1,1)]", "+1 * Mc[(1,1,1,.0,1,.3,2,1)]",
                "+1 * Mc[(1,1,1,.0,1,.3,1,2)]", "+1 * Mc[(1,1,1,.0,1,.3,1,1,1)]"});
  expect_lines(r, "abelianize M", to_text(abelianize(NcCombination::single(Basis::Mnc, S("{0}|{3,5}|{0,2,4}|{0,1}")))),
               {"+1 * Mc[(.0,2,.2,.1)]"});
  expect_lines(r, "abelianize Q", to_text(abelianize(NcCombination::single(Basis::Q, S("{1}|{2}|{0,3}")))),
               {"+1 * L[(2,.1)]"});
}

void oracle_examples(SuiteReport& r) {
  auto f = expand(Basis::Mnc, S("{2,4}|{0,1,5}|{0,3}"), 4);
  for (const char* mono : {"t2 t3 | x2 x1 x3 x1 x2", "t2 t4 | x2 x1 x4 x1 x2"}) {
    auto it = f.terms.find(parse_nc_monomial(mono));
    r.record(it != f.terms.end() && it->second == 1, std::string("expansion contains ") + mono);
  }
  auto [s, I] = std_and_I(parse_nc_monomial("t2 t8 | x7 x2 x7 x5 x9 x2 x5 x7"));
  expect_equal(r, "std", to_string(s), "t1 t4 | x3 x1 x3 x2 x5 x1 x2 x3");
  expect_equal(r, "I(u)", to_string(I), "{0,2,6}|{4,7}|{1,3,8}|{0}|{5}");
  expect_equal(r, "commutative action", to_string(qs_action({5, 3, 2}, parse_c_monomial("t2 t5 x3^3 x4 x5^2 x7"), 9)),
               "t2 t6 x3^3 x4 x6^2 x7");
  expect_equal(r, "noncommutative action",
               to_string(qs_action({4, 3, 6, 1}, parse_nc_monomial("t2 t4 | x3 x3 x2 x6 x3 x2 x6"), 9)),
               "t1 t5 | x3 x3 x1 x7 x3 x1 x7");
}

}  // namespace

SuiteReport paper_examples(const VerifyOptions&) {
  SuiteReport r;
  combinatorics(r);
  orders(r);
  products(r);
  other_bases(r);
  oracle_examples(r);
  return r;
}

}  // namespace superhopf::detail
