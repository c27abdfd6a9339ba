#include "superhopf/basis_change.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

#include "superhopf/posets.hpp"
#include "superhopf/text.hpp"

namespace superhopf {

std::vector<std::pair<SetSupercomposition, int>> block_arrangements(const SetSupercomposition& I) {
  std::vector<std::size_t> order(I.length());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::pair<SetSupercomposition, int>> out;
  do {
    BlockSequence blocks;
    std::size_t inv = 0;
    for (std::size_t a = 0; a < order.size(); ++a) {
      blocks.push_back(I[order[a]]);
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        if (order[a] > order[b] && I[order[a]].fermionic() && I[order[b]].fermionic()) ++inv;
      }
    }
    out.emplace_back(SetSupercomposition::trusted(std::move(blocks)), inv % 2 ? -1 : 1);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::pair<SetSupercomposition, int> normalize_superpartition(const SetSupercomposition& I) {
  std::vector<std::size_t> order(I.length());
  std::iota(order.begin(), order.end(), 0);
  // Fermionic blocks first; inside each kind, by smallest nonzero element ({0} first).
  auto key = [&](std::size_t p) {
    const Block& b = I[p];
    return std::pair<int, Value>{b.fermionic() ? 0 : 1, b.nonzero_count() ? b.min_nonzero() : 0};
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  BlockSequence blocks;
  std::size_t inv = 0;
  for (std::size_t a = 0; a < order.size(); ++a) {
    blocks.push_back(I[order[a]]);
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (order[a] > order[b] && I[order[a]].fermionic() && I[order[b]].fermionic()) ++inv;
    }
  }
  auto P = SetSupercomposition::trusted(std::move(blocks));
  require_set_superpartition(P);
  return {std::move(P), inv % 2 ? -1 : 1};
}

namespace {

using Step = NcCombination (*)(const NcCombination&);

NcCombination Q_to_M(const NcCombination& x) {
  NcCombination out(Basis::Mnc);
  for (const auto& [I, c] : x.terms()) {
    for (const auto& J : sc_upset_elements(I)) out.add(J, c);
  }
  return out;
}

NcCombination M_to_Q(const NcCombination& x) {
  NcCombination out(Basis::Q);
  for (const auto& [I, c] : x.terms()) {
    for (const auto& J : sc_upset_elements(I)) {
      out.add(J, (I.length() - J.length()) % 2 ? -c : c);
    }
  }
  return out;
}

NcCombination MonF_to_Q(const NcCombination& x) {
  NcCombination out(Basis::Q);
  for (const auto& [I, c] : x.terms()) {
    require_superpermutation(I);
    for (const auto& [J, mu] : weak_mobius_row(I)) out.add(J, c * mu);
  }
  return out;
}

NcCombination Q_to_MonF(const NcCombination& x) {
  NcCombination out(Basis::MonF);
  for (const auto& [I, c] : x.terms()) {
    if (!is_superpermutation(I)) {
      throw ConversionError("Q -> MonF needs superpermutation indices, got " + to_string(I));
    }
    for (const auto& J : weak_upset(I)) out.add(J, c);
  }
  return out;
}

NcCombination m_to_M(const NcCombination& x) {
  NcCombination out(Basis::Mnc);
  for (const auto& [I, c] : x.terms()) {
    require_set_superpartition(I);
    for (const auto& [J, s] : block_arrangements(I)) out.add(J, c * s);
  }
  return out;
}

// The coefficient of m_P is the coefficient of M_P for each set superpartition P.
NcCombination M_to_m(const NcCombination& x) {
  NcCombination out(Basis::m);
  for (const auto& [I, c] : x.terms()) {
    if (is_set_superpartition(I)) out.add(I, c);
  }
  NcCombination residual = x;
  residual -= m_to_M(out);
  if (!residual.is_zero()) {
    throw ConversionError("Mnc -> m: input is not symmetric (residual term at " +
                          to_string(residual.terms().begin()->first) + ")");
  }
  return out;
}

struct Edge {
  Basis from;
  Basis to;
  Step step;
};

constexpr Edge kEdges[] = {
    {Basis::Q, Basis::Mnc, Q_to_M},     {Basis::Mnc, Basis::Q, M_to_Q},
    {Basis::MonF, Basis::Q, MonF_to_Q}, {Basis::Q, Basis::MonF, Q_to_MonF},
    {Basis::m, Basis::Mnc, m_to_M},     {Basis::Mnc, Basis::m, M_to_m},
};

// Shortest chain of direct conversions, found by breadth-first search.
std::optional<std::vector<Step>> route(Basis from, Basis to) {
  std::map<Basis, std::pair<Basis, Step>> parent;
  std::deque<Basis> queue{from};
  parent.emplace(from, std::pair<Basis, Step>{from, nullptr});
  while (!queue.empty()) {
    Basis b = queue.front();
    queue.pop_front();
    if (b == to) break;
    for (const auto& e : kEdges) {
      if (e.from == b && !parent.count(e.to)) {
        parent.emplace(e.to, std::pair<Basis, Step>{b, e.step});
        queue.push_back(e.to);
      }
    }
  }
  if (!parent.count(to)) return std::nullopt;
  std::vector<Step> steps;
  for (Basis b = to; b != from; b = parent.at(b).first) steps.push_back(parent.at(b).second);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

NcCombination change_basis(const NcCombination& x, Basis target) {
  if (is_commutative(target)) {
    throw ConversionError("cannot convert " + basis_name(x.basis()) + " to " + basis_name(target) +
                          "; use abelianize");
  }
  auto steps = route(x.basis(), target);
  if (!steps) {
    throw ConversionError("no conversion from " + basis_name(x.basis()) + " to " + basis_name(target));
  }
  NcCombination y = x;
  for (Step s : *steps) y = s(y);
  return y;
}

CCombination change_basis(const CCombination& x, Basis target) {
  if (!is_commutative(target) || !is_commutative(x.basis())) {
    throw ConversionError("cannot convert " + basis_name(x.basis()) + " to " + basis_name(target));
  }
  if (x.basis() == target) return x;
  CCombination out(target);
  for (const auto& [alpha, c] : x.terms()) {
    for (const auto& beta : dotted_downset_elements(alpha)) {
      bool negate = target == Basis::L && (beta.length() - alpha.length()) % 2 == 1;
      out.add(beta, negate ? -c : c);
    }
  }
  return out;
}

}  // namespace superhopf
