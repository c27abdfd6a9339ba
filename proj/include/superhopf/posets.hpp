#pragma once

// The three partial orders of the theory:
//   - refinement on dotted compositions (plain parts split into plain parts),
//   - merge order on set supercompositions (increasing runs of non-fermionic
//     blocks merge upward),
//   - super left weak order on superpermutations (equal alpha image and
//     inclusion of position inversions of the associated words).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superhopf/combinat.hpp"
#include "superhopf/text.hpp"

namespace superhopf {

/// Finite poset given by its Hasse diagram. Elements are sorted by their text
/// serialization; covers hold (lower, upper) element positions.
template <class T>
struct PosetInterval {
  std::vector<T> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::size_t size() const noexcept { return elements.size(); }

  std::size_t index_of(const T& x) const {
    auto it = std::find(elements.begin(), elements.end(), x);
    if (it == elements.end()) throw std::out_of_range("element not in interval: " + to_string(x));
    return static_cast<std::size_t>(it - elements.begin());
  }
};

/// Reflexive-transitive closure of the covers: leq[a][b] iff a <= b.
template <class T>
std::vector<std::vector<bool>> order_matrix(const PosetInterval<T>& P) {
  const std::size_t n = P.size();
  std::vector<std::vector<std::size_t>> up(n);
  for (auto [lo, hi] : P.covers) up[lo].push_back(hi);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    leq[s][s] = true;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : up[x]) {
        if (!leq[s][y]) {
          leq[s][y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return leq;
}

/// mu(lo, x) for every element x, via mu(x,x) = 1 and
/// mu(lo,y) = -sum_{lo <= z < y} mu(lo,z). Zero where x is not above lo.
template <class T>
std::vector<long long> mobius_row(const PosetInterval<T>& P, std::size_t lo) {
  auto leq = order_matrix(P);
  const std::size_t n = P.size();
  // Elements above lo, ordered by the number of elements below them
  // (a linear extension).
  std::vector<std::size_t> above;
  for (std::size_t x = 0; x < n; ++x) {
    if (leq[lo][x]) above.push_back(x);
  }
  std::vector<std::size_t> height(n, 0);
  for (auto x : above) {
    for (auto z : above) height[x] += leq[z][x];
  }
  std::stable_sort(above.begin(), above.end(),
                   [&](std::size_t a, std::size_t b) { return height[a] < height[b]; });
  std::vector<long long> mu(n, 0);
  for (auto y : above) {
    if (y == lo) {
      mu[y] = 1;
      continue;
    }
    long long s = 0;
    for (auto z : above) {
      if (z != y && leq[z][y]) s += mu[z];
    }
    mu[y] = -s;
  }
  return mu;
}

// Refinement order on dotted compositions.
bool dotted_leq(const DottedComposition& beta, const DottedComposition& alpha);
PosetInterval<DottedComposition> dotted_downset(const DottedComposition& alpha);
/// Elements of the downset without the Hasse diagram.
std::vector<DottedComposition> dotted_downset_elements(const DottedComposition& alpha);

// Merge order on set supercompositions.
bool sc_leq(const SetSupercomposition& I, const SetSupercomposition& J);
PosetInterval<SetSupercomposition> sc_upset(const SetSupercomposition& I);
std::vector<SetSupercomposition> sc_upset_elements(const SetSupercomposition& I);

// Super left weak order on superpermutations.

/// Position-inversion set of w_of(I) as a bitmask over pairs (i < j).
/// Words longer than 11 letters are rejected.
std::uint64_t inversion_mask(const SetSupercomposition& I);

bool weak_leq(const SetSupercomposition& I, const SetSupercomposition& J);

/// (I_min, J_max) with alpha^{-1}(sigma) == [I_min, J_max]. Throws if sigma has
/// a plain part larger than 1.
std::pair<SetSupercomposition, SetSupercomposition> fiber_bounds(const DottedComposition& sigma);

/// Every superpermutation with the same alpha image as I.
std::vector<SetSupercomposition> alpha_fiber(const SetSupercomposition& I);

PosetInterval<SetSupercomposition> weak_interval(const SetSupercomposition& I,
                                                 const SetSupercomposition& J);

/// All J with I <=_W J paired with mu_W(I, J), in increasing length order.
std::vector<std::pair<SetSupercomposition, long long>> weak_mobius_row(const SetSupercomposition& I);

/// All J with I <=_W J.
std::vector<SetSupercomposition> weak_upset(const SetSupercomposition& I);

long long mobius_weak(const SetSupercomposition& I, const SetSupercomposition& J);

}  // namespace superhopf
