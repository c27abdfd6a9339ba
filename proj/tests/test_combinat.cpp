#include <doctest.h>

#include "random_indices.hpp"
#include "superhopf/enumerate.hpp"
#include "superhopf/text.hpp"

using namespace superhopf;

namespace {
SetSupercomposition S(std::string_view t) { return parse_set_supercomposition(t); }
DottedComposition D(std::string_view t) { return parse_dotted_composition(t); }
}  // namespace

TEST_CASE("bidegree and parity") {
  auto I = S("{0,1,3}|{4}|{0}|{0,2}");
  CHECK(I.length() == 4);
  CHECK(I.bidegree() == Bidegree{4, 3});
  CHECK(I.parity() == 1);
  CHECK(S("e").empty());
  CHECK(D("(2,.1)").total_size() == 4);
}

TEST_CASE("parse errors name the problem") {
  CHECK_THROWS_WITH_AS(S("{1,2}|{2,3}"), doctest::Contains("2 repeated"), AxiomError);
  CHECK_THROWS_AS(S("{1,3}"), AxiomError);
  try {
    S("{1,2|{3}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
  CHECK_THROWS_AS(D("(1,,2)"), ParseError);
  CHECK_THROWS_AS(D("(0)"), std::invalid_argument);
}

TEST_CASE("print/parse roundtrip on random indices") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto I = test_support::random_sc(rng);
    CHECK(parse_set_supercomposition(to_string(I)) == I);
    auto P = test_support::random_superpartition(rng);
    CHECK(is_set_superpartition(P));
    CHECK(parse_set_supercomposition(to_string(P)) == P);
    auto a = test_support::random_dotted(rng);
    CHECK(parse_dotted_composition(to_string(a)) == a);
    // "e" is read back as the empty set supercomposition.
    if (!a.empty()) CHECK(std::get<DottedComposition>(parse_index(to_string(a))) == a);
  }
}

TEST_CASE("shift and standardize") {
  CHECK(to_string(shift(S("{0,2}|{1}").blocks(), 3)) == "{0,5}|{4}");
  CHECK(to_string(standardize(parse_block_sequence("{0,6}|{3}|{0,4,5}"))) == "{0,4}|{1}|{0,2,3}");
  CHECK(to_string(standardized_slice(S("{2}|{0,3}|{1}"), 1, 3)) == "{0,2}|{1}");
}

TEST_CASE("alpha, gamma, w and descents") {
  CHECK(to_string(alpha_of(S("{0}|{3,5}|{0,2,4}|{0,1}"))) == "(.0,2,.2,.1)");
  CHECK(to_string(gamma_of(S("{0,1,8}|{2}|{5}|{3}|{0}|{6}|{4}|{7}"))) == "(.2,2,1,.0,1,2)");
  CHECK(word_to_string(w_of(S("{3}|{0,1,5}|{4}|{0}|{2}"))) == "3 1 5 4 2");
  CHECK(global_descents(S("{0,6}|{3}|{0,4,5}|{1}|{2}")) == std::vector<std::size_t>{0, 1, 3, 5});
  CHECK(is_superpermutation(S("{2}|{0,3}|{1}")));
  CHECK_FALSE(is_superpermutation(S("{1,2}")));
}

TEST_CASE("lift is a section of gamma") {
  CHECK(to_string(lift(D("(2,.1)"))) == "{1}|{2}|{0,3}");
  CHECK(to_string(lift(D("(1,1)"))) == "{2}|{1}");
  for (std::size_t size = 0; size <= 6; ++size) {
    for (const auto& a : dotted_compositions_of_size(size)) {
      CHECK(gamma_of(lift(a)) == a);
      CHECK(alpha_of(block_lift(a)) == a);
    }
  }
}

TEST_CASE("enumeration sizes") {
  // Ordered set partitions of [3] are 13; with one fermionic block more.
  CHECK(set_supercompositions(3, 0).size() == 13);
  CHECK(superpermutations(3, 0).size() == 6);
  CHECK(set_superpartitions(3, 0).size() == 5);
  for (const auto& I : set_supercompositions_of_size(4)) CHECK(I.total_size() == 4);
  for (const auto& a : dotted_compositions_of_size(3)) {
    for (const auto& I : gamma_fiber(a)) CHECK(gamma_of(I) == a);
  }
}
