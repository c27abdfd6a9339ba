#pragma once

// Truncated polynomial models of the algebras: monomials in theta_1..theta_N
// and x_1..x_N, either with commuting x (CMonomial) or as words (NcMonomial).
// Thetas anticommute and square to zero in both.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superhopf/combination.hpp"
#include "superhopf/text.hpp"

namespace superhopf {

struct NcMonomial {
  std::vector<Value> thetas;  // strictly increasing
  std::vector<Value> word;

  friend auto operator<=>(const NcMonomial&, const NcMonomial&) = default;
};

struct CMonomial {
  std::vector<Value> thetas;     // strictly increasing
  std::vector<Value> exponents;  // exponents[i] belongs to x_{i+1}; no trailing zeros

  friend auto operator<=>(const CMonomial&, const CMonomial&) = default;
};

template <class Mono>
struct SuperPoly {
  std::size_t N = 0;
  std::map<Mono, Coeff> terms;

  SuperPoly() = default;
  explicit SuperPoly(std::size_t n) : N(n) {}

  void add(const Mono& u, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(u, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  void add_scaled(const SuperPoly& other, const Coeff& c) {
    for (const auto& [u, v] : other.terms) add(u, v * c);
  }

  friend bool operator==(const SuperPoly&, const SuperPoly&) = default;
};

using NcPoly = SuperPoly<NcMonomial>;
using CPoly = SuperPoly<CMonomial>;

/// Product u*v in normal form with its sign, or nullopt when a theta repeats.
std::optional<std::pair<NcMonomial, int>> mono_mul(const NcMonomial& u, const NcMonomial& v);
std::optional<std::pair<CMonomial, int>> mono_mul(const CMonomial& u, const CMonomial& v);

/// Largest variable index occurring in u (0 for the constant monomial).
Value max_index(const NcMonomial& u);
Value max_index(const CMonomial& u);

/// `t2 t8 | x7 x2 x7 x5` and `t2 t5 x3^3 x4 x5^2 x7`; the constant monomial is `1`.
std::string to_string(const NcMonomial& u);
std::string to_string(const CMonomial& u);
NcMonomial parse_nc_monomial(std::string_view text);
CMonomial parse_c_monomial(std::string_view text);

/// One `<signed coefficient> * <monomial>` per line, sorted by monomial text.
template <class Mono>
std::string to_string(const SuperPoly<Mono>& f) {
  std::vector<std::pair<std::string, std::string>> lines;
  for (const auto& [u, c] : f.terms) {
    std::string coeff = c.str();
    if (c > 0) coeff = "+" + coeff;
    lines.emplace_back(to_string(u), coeff);
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& [mono, coeff] : lines) out += coeff + " * " + mono + "\n";
  return out;
}

// Expansions truncated to the alphabet [N].
NcPoly expand(Basis basis, const SetSupercomposition& I, std::size_t N);
CPoly expand(Basis basis, const DottedComposition& alpha, std::size_t N);
NcPoly expand(const NcCombination& x, std::size_t N);
CPoly expand(const CCombination& x, std::size_t N);

NcPoly multiply(const NcPoly& f, const NcPoly& g);
CPoly multiply(const CPoly& f, const CPoly& g);

/// Lets the x variables commute.
CPoly commutative_image(const NcPoly& f);

/// (std(u), I(u)).
std::pair<NcMonomial, SetSupercomposition> std_and_I(const NcMonomial& u);

/// Quasisymmetrizing action of s_{gens[0]} ... s_{gens[r-1]} (rightmost
/// acts first). Throws std::out_of_range if an index would exceed N.
NcMonomial qs_action(const std::vector<Value>& gens, const NcMonomial& u, std::size_t N);
CMonomial qs_action(const std::vector<Value>& gens, const CMonomial& u, std::size_t N);
NcPoly qs_action(const std::vector<Value>& gens, const NcPoly& f);
CPoly qs_action(const std::vector<Value>& gens, const CPoly& f);

/// s_i f == f for all 1 <= i <= max_gen. Requires max_gen < f.N so the action
/// stays inside the alphabet.
bool check_invariance(const NcPoly& f, std::size_t max_gen);
bool check_invariance(const CPoly& f, std::size_t max_gen);

/// The monomial with index set A (ascending, one entry per block) and
/// associated set supercomposition I.
NcMonomial monomial_AI(const std::vector<Value>& A, const SetSupercomposition& I);
/// The monomial with index set A (one entry per part) and dotted composition alpha.
CMonomial monomial_Aalpha(const std::vector<Value>& A, const DottedComposition& alpha);

/// sigma(A) for sigma = s_{gens[0]} ... s_{gens[r-1]}, sorted ascending.
std::vector<Value> permute_set(const std::vector<Value>& gens, const std::vector<Value>& A);

/// Compares expand(I) * expand(J) with the expansion of the formula product.
bool verify_product(Basis basis, const AnyIndex& I, const AnyIndex& J, std::size_t N);

/// Compares the coproduct formula with the expansion over the doubled alphabet
/// x_1..x_N, y_1..y_N split into its two halves.
bool verify_coproduct(Basis basis, const SetSupercomposition& I, std::size_t N);

/// Splits each monomial over [2N] into (letters <= N) (x) (letters > N, shifted down).
std::map<std::pair<NcMonomial, NcMonomial>, Coeff> split_doubled(const NcPoly& f, std::size_t N);

}  // namespace superhopf
