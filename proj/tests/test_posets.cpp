#include <doctest.h>

#include "superhopf/output.hpp"
#include "superhopf/posets.hpp"

using namespace superhopf;

namespace {
SetSupercomposition S(std::string_view t) { return parse_set_supercomposition(t); }
DottedComposition D(std::string_view t) { return parse_dotted_composition(t); }

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}
}  // namespace

TEST_CASE("refinement downset is Boolean") {
  auto P = dotted_downset(D("(1,2,.0,1,.3,3)"));
  CHECK(P.size() == 8);
  CHECK(P.covers.size() == 12);
  CHECK(dotted_leq(D("(1,1,1,.0,1,.3,1,1,1)"), D("(1,2,.0,1,.3,3)")));
  CHECK_FALSE(dotted_leq(D("(.1)"), D("(1)")));
  CHECK_FALSE(dotted_leq(D("(.1,1)"), D("(.2)")));
}

TEST_CASE("merge upsets") {
  auto P = sc_upset(S("{10}|{3}|{4}|{0}|{9}|{0,1,5,7}|{2}|{6}|{8}"));
  CHECK(P.size() == 8);
  CHECK(sc_leq(S("{10}|{3}|{4}|{0}|{9}|{0,1,5,7}|{2}|{6}|{8}"), S("{10}|{3,4}|{0}|{9}|{0,1,5,7}|{2,6,8}")));
  CHECK_FALSE(sc_leq(S("{2}|{1}"), S("{1,2}")));
  auto F = sc_upset(S("{0}|{1}|{2}|{4}|{0,3}"));
  CHECK(F.size() == 4);
  auto G = sc_upset(S("{1}|{2}|{4}|{3}"));
  CHECK(G.size() == 4);
}

TEST_CASE("weak order fibers") {
  auto [lo, hi] = fiber_bounds(D("(1,.1,1)"));
  CHECK(to_string(lo) == "{1}|{0,2}|{3}");
  CHECK(to_string(hi) == "{3}|{0,2}|{1}");
  auto P = weak_interval(lo, hi);
  CHECK(P.size() == 6);
  CHECK(P.covers.size() == 6);
  CHECK(alpha_fiber(lo).size() == 6);
  CHECK(mobius_weak(lo, hi) == 1);
  CHECK(mobius_weak(lo, S("{2}|{0,1}|{3}")) == -1);
  CHECK_THROWS(weak_interval(hi, lo));
  CHECK_THROWS(fiber_bounds(D("(2)")));
  CHECK(weak_upset(hi).size() == 1);
}

TEST_CASE("DOT output") {
  auto diamond = emit_dot(dotted_downset(D("(3)")));
  CHECK(diamond.rfind("digraph poset {", 0) == 0);
  CHECK(count(diamond, "label=") == 4);
  CHECK(count(diamond, "->") == 4);
  auto single = emit_dot(dotted_downset(D("(.1,1)")));
  CHECK(count(single, "label=") == 1);
  CHECK(count(single, "->") == 0);
  auto [lo, hi] = fiber_bounds(D("(1,.1,1)"));
  auto hex = emit_dot(weak_interval(lo, hi));
  CHECK(count(hex, "label=") == 6);
  CHECK(count(hex, "->") == 6);
  CHECK(hex == emit_dot(weak_interval(lo, hi)));
}
