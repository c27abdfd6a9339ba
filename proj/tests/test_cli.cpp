#include <doctest.h>

#include <sstream>

#include "superhopf/cli.hpp"

namespace {
struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = superhopf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }
}  // namespace

TEST_CASE("product") {
  auto r = run({"product", "--basis", "Q", "{0,2}|{0,1,3}", "{0,1,2}|{0}"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 6);
  auto l = run({"product", "--basis", "L", "(2,.1)", "(2)"});
  CHECK(l.code == 0);
  CHECK(lines(l.out) == 14);
  CHECK(l.out.find("+2 * L[(2,2,.1)]") != std::string::npos);
  CHECK(run({"product", "--basis", "Q", "{0,2}|{0,1,3}", "{0,1,2}|{0}"}).out == r.out);
}

TEST_CASE("coproduct, antipode, convert, expand") {
  auto c = run({"coproduct", "--basis", "MonF", "{0,6}|{3}|{0,4,5}|{1}|{2}"});
  CHECK(c.code == 0);
  CHECK(lines(c.out) == 4);
  auto a = run({"antipode", "--basis", "Q", "{1}|{2}"});
  CHECK(a.out == "+1 * Q[{2}|{1}]\n");
  auto v = run({"convert", "--basis", "m", "--to", "Mnc", "{0,2,4}|{0,3}|{1}"});
  CHECK(lines(v.out) == 6);
  auto s = run({"convert", "--basis", "L", "--to", "Mc", "--format", "structured", "(1,2,.0,1,.3,3)"});
  CHECK(s.out.find("\"basis\":\"Mc\"") != std::string::npos);
  auto e = run({"expand", "--basis", "Mc", "--vars", "2", "(1)"});
  CHECK(e.code == 0);
  CHECK(e.out.find("x1") != std::string::npos);
}

TEST_CASE("poset") {
  auto r = run({"poset", "--upset", "{0}|{1}|{2}|{4}|{0,3}", "--dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph poset {", 0) == 0);
  auto f = run({"poset", "--fiber", "(1,.1,1)"});
  CHECK(lines(f.out) == 6);
}

TEST_CASE("errors and exit codes") {
  auto r = run({"product", "--basis", "Q", "{1,2}|{2,3}", "{1}"});
  CHECK(r.code == 2);
  CHECK(r.err.find("repeated") != std::string::npos);
  CHECK(run({"product", "--basis", "X", "{1}", "{1}"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"convert", "--basis", "Mnc", "--to", "m", "{2}|{1}"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "paper-examples"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}
