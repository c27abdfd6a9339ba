#include "superhopf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>

#include "superhopf/basis_change.hpp"
#include "superhopf/hopf.hpp"
#include "superhopf/oracle.hpp"
#include "superhopf/output.hpp"
#include "superhopf/posets.hpp"
#include "superhopf/verify.hpp"

namespace superhopf::cli {

namespace {

enum class Format { text, structured, dot };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "structured") return Format::structured;
  if (s == "dot") return Format::dot;
  throw UsageError("unknown format '" + s + "'");
}

template <class X>
std::string render(const X& x, Format f) {
  if (f == Format::dot) throw UsageError("dot output is only available for poset");
  return f == Format::structured ? to_structured(x) + "\n" : to_text(x);
}

std::string render_combination(Basis b, const std::string& index, Format f,
                               const std::function<NcCombination(const NcCombination&)>& nc,
                               const std::function<CCombination(const CCombination&)>& c) {
  if (is_commutative(b)) {
    if (!c) throw UsageError("operation not available in basis " + basis_name(b));
    return render(c(CCombination::single(b, parse_dotted_composition(index))), f);
  }
  return render(nc(NcCombination::single(b, parse_set_supercomposition(index))), f);
}

template <class T>
std::string render_poset(const PosetInterval<T>& P, Format f) {
  if (f == Format::dot) return emit_dot(P);
  if (f == Format::structured) {
    nlohmann::json j;
    j["elements"] = nlohmann::json::array();
    for (const auto& x : P.elements) j["elements"].push_back(to_string(x));
    j["covers"] = nlohmann::json::array();
    for (auto [lo, hi] : P.covers) j["covers"].push_back({lo, hi});
    return j.dump() + "\n";
  }
  std::string s;
  for (const auto& x : P.elements) s += to_string(x) + "\n";
  return s;
}

struct Options {
  std::string basis = "Mnc";
  std::string format = "text";
  std::string target;
  std::size_t vars = 0;
  std::vector<std::string> indices;
  std::string upset, downset, fiber;
  std::vector<std::string> weak;
  bool dot = false;
  std::vector<std::string> suites;
  std::size_t max_size = 4;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--basis", o.basis, "Mnc, Q, m, MonF, Mc or L");
  sub->add_option("--format", o.format, "text, structured or dot");
}

int run_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.max_size = o.max_size;
  auto names = o.suites.empty() ? suite_names() : o.suites;
  bool all_ok = true;
  for (const auto& name : names) {
    auto r = run_suite(name, vo);
    out << r.suite << ": " << r.passed << " passed, " << r.failed << " failed\n";
    if (!r.ok()) out << "  first failure: " << r.first_failure << "\n";
    all_ok = all_ok && r.ok();
  }
  out << (all_ok ? "all checks passed\n" : "verification failed\n");
  return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in the superspace quasisymmetric Hopf algebras", "superhopf"};
  app.require_subcommand(1);
  Options o;

  auto* product = app.add_subcommand("product", "Product of two basis elements");
  add_common(product, o);
  product->add_option("indices", o.indices)->expected(2)->required();

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of a basis element");
  add_common(coproduct, o);
  coproduct->add_option("index", o.indices)->expected(1)->required();

  auto* antipode_cmd = app.add_subcommand("antipode", "Antipode of a basis element");
  add_common(antipode_cmd, o);
  antipode_cmd->add_option("index", o.indices)->expected(1)->required();

  auto* convert = app.add_subcommand("convert", "Change of basis");
  add_common(convert, o);
  convert->add_option("--to", o.target)->required();
  convert->add_option("index", o.indices)->expected(1)->required();

  auto* expand_cmd = app.add_subcommand("expand", "Polynomial expansion in N variables");
  add_common(expand_cmd, o);
  expand_cmd->add_option("--vars", o.vars)->required();
  expand_cmd->add_option("index", o.indices)->expected(1)->required();

  auto* poset = app.add_subcommand("poset", "Intervals of the three orders");
  poset->add_option("--format", o.format);
  auto* g = poset->add_option_group("interval");
  g->add_option("--upset", o.upset, "merge upset of a set supercomposition");
  g->add_option("--downset", o.downset, "refinement downset of a dotted composition");
  g->add_option("--fiber", o.fiber, "weak-order fiber of a dotted composition");
  g->add_option("--weak", o.weak, "weak-order interval [I, J]")->expected(2);
  g->require_option(1);
  poset->add_flag("--dot", o.dot, "same as --format dot");

  auto* verify = app.add_subcommand("verify", "Run self-check suites");
  verify->add_option("--suite", o.suites, "suite name; repeatable, default all");
  verify->add_option("--max-size", o.max_size);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Format f = o.dot ? Format::dot : parse_format(o.format);
    const Basis b = parse_basis(o.basis);
    if (*verify) return run_verify(o, out);
    if (*product) {
      if (is_commutative(b)) {
        auto x = CCombination::single(b, parse_dotted_composition(o.indices[0]));
        auto y = CCombination::single(b, parse_dotted_composition(o.indices[1]));
        out << render(multiply(x, y), f);
      } else {
        auto x = NcCombination::single(b, parse_set_supercomposition(o.indices[0]));
        auto y = NcCombination::single(b, parse_set_supercomposition(o.indices[1]));
        out << render(multiply(x, y), f);
      }
    } else if (*coproduct) {
      if (is_commutative(b)) throw UsageError("coproduct is implemented for Mnc, Q, m and MonF");
      out << render(superhopf::coproduct(NcCombination::single(b, parse_set_supercomposition(o.indices[0]))), f);
    } else if (*antipode_cmd) {
      out << render_combination(b, o.indices[0], f, [](const NcCombination& x) { return antipode(x); }, {});
    } else if (*convert) {
      const Basis t = parse_basis(o.target);
      out << render_combination(
          b, o.indices[0], f, [t](const NcCombination& x) { return change_basis(x, t); },
          [t](const CCombination& x) { return change_basis(x, t); });
    } else if (*expand_cmd) {
      if (f != Format::text) throw UsageError("expand supports text output only");
      auto text = is_commutative(b) ? to_string(expand(b, parse_dotted_composition(o.indices[0]), o.vars))
                                     : to_string(expand(b, parse_set_supercomposition(o.indices[0]), o.vars));
      out << (text.empty() ? "0\n" : text);
    } else if (*poset) {
      if (!o.upset.empty()) {
        out << render_poset(sc_upset(parse_set_supercomposition(o.upset)), f);
      } else if (!o.downset.empty()) {
        out << render_poset(dotted_downset(parse_dotted_composition(o.downset)), f);
      } else if (!o.fiber.empty()) {
        auto [lo, hi] = fiber_bounds(parse_dotted_composition(o.fiber));
        out << render_poset(weak_interval(lo, hi), f);
      } else {
        out << render_poset(weak_interval(parse_set_supercomposition(o.weak[0]),
                                          parse_set_supercomposition(o.weak[1])),
                            f);
      }
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace superhopf::cli
