#include "superhopf/posets.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace superhopf {

namespace {

// Sorts elements by serialization and remaps the cover pairs accordingly.
template <class T>
PosetInterval<T> make_interval(std::vector<T> elements,
                               const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::vector<std::string> keys;
  keys.reserve(elements.size());
  for (const auto& e : elements) keys.push_back(to_string(e));
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> position(elements.size());
  PosetInterval<T> P;
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    P.elements.push_back(std::move(elements[order[i]]));
  }
  for (auto [lo, hi] : covers) P.covers.emplace_back(position[lo], position[hi]);
  std::sort(P.covers.begin(), P.covers.end());
  return P;
}

// Boolean lattice on masks over `bits` generators: covers are (m | g) -> m when
// `more_is_lower`, m -> (m | g) otherwise.
std::vector<std::pair<std::size_t, std::size_t>> boolean_covers(std::size_t bits, bool more_is_lower) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t m = 0; m < (std::size_t{1} << bits); ++m) {
    for (std::size_t g = 0; g < bits; ++g) {
      if (m & (std::size_t{1} << g)) continue;
      std::size_t bigger = m | (std::size_t{1} << g);
      if (more_is_lower) {
        covers.emplace_back(bigger, m);
      } else {
        covers.emplace_back(m, bigger);
      }
    }
  }
  return covers;
}

struct Cut {
  std::size_t part;  // index of the plain part in alpha
  Value offset;      // split after this many units
};

std::vector<Cut> refinement_cuts(const DottedComposition& alpha) {
  std::vector<Cut> cuts;
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (alpha[i].dotted) continue;
    for (Value c = 1; c < alpha[i].value; ++c) cuts.push_back({i, c});
  }
  return cuts;
}

DottedComposition refine(const DottedComposition& alpha, const std::vector<Cut>& cuts, std::size_t mask) {
  std::vector<DottedPart> parts;
  std::size_t c = 0;
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (alpha[i].dotted) {
      parts.push_back(alpha[i]);
      continue;
    }
    Value last = 0;
    for (; c < cuts.size() && cuts[c].part == i; ++c) {
      if (mask & (std::size_t{1} << c)) {
        parts.push_back({cuts[c].offset - last, false});
        last = cuts[c].offset;
      }
    }
    parts.push_back({alpha[i].value - last, false});
  }
  return DottedComposition(std::move(parts));
}

// Gaps between consecutive non-fermionic blocks i, i+1 with max(I_i) < min(I_{i+1}).
std::vector<std::size_t> merge_gaps(const SetSupercomposition& I) {
  std::vector<std::size_t> gaps;
  for (std::size_t i = 0; i + 1 < I.length(); ++i) {
    const auto& a = I[i];
    const auto& b = I[i + 1];
    if (!a.fermionic() && !b.fermionic() && a.max_nonzero() < b.min_nonzero()) gaps.push_back(i);
  }
  return gaps;
}

SetSupercomposition merge_at(const SetSupercomposition& I, const std::vector<std::size_t>& gaps,
                             std::size_t mask) {
  std::vector<bool> join(I.length(), false);
  for (std::size_t t = 0; t < gaps.size(); ++t) {
    if (mask & (std::size_t{1} << t)) join[gaps[t] + 1] = true;
  }
  BlockSequence out;
  for (std::size_t i = 0; i < I.length(); ++i) {
    if (join[i]) {
      out.back() = out.back().merged(I[i]);
    } else {
      out.push_back(I[i]);
    }
  }
  return SetSupercomposition::trusted(std::move(out));
}

std::size_t pair_bit(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

std::uint64_t word_inversion_mask(const std::vector<Value>& w) {
  if (w.size() > 11) throw std::invalid_argument("weak order supports words of length at most 11");
  std::uint64_t mask = 0;
  for (std::size_t j = 1; j < w.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (w[i] > w[j]) mask |= std::uint64_t{1} << pair_bit(i, j);
    }
  }
  return mask;
}

bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

// Distributes [n] into blocks whose fermionic flags and nonzero sizes follow `shape`.
void distribute(const std::vector<std::pair<bool, std::size_t>>& shape, std::size_t b,
                std::vector<bool>& used, BlockSequence& prefix, std::vector<SetSupercomposition>& out) {
  if (b == shape.size()) {
    out.push_back(SetSupercomposition::trusted(prefix));
    return;
  }
  const auto [fermionic, size] = shape[b];
  const std::size_t n = used.size() - 1;
  std::vector<Value> chosen;
  if (fermionic) chosen.push_back(0);
  auto rec = [&](auto&& self, Value from, std::size_t left) -> void {
    if (left == 0) {
      prefix.emplace_back(chosen);
      distribute(shape, b + 1, used, prefix, out);
      prefix.pop_back();
      return;
    }
    for (Value v = from; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      chosen.push_back(v);
      self(self, v + 1, left - 1);
      chosen.pop_back();
      used[v] = false;
    }
  };
  rec(rec, 1, size);
}

}  // namespace

bool dotted_leq(const DottedComposition& beta, const DottedComposition& alpha) {
  std::size_t j = 0;
  for (const auto& a : alpha.parts()) {
    if (a.dotted) {
      if (j >= beta.length() || beta[j] != a) return false;
      ++j;
      continue;
    }
    Value sum = 0;
    while (sum < a.value) {
      if (j >= beta.length() || beta[j].dotted) return false;
      sum += beta[j++].value;
    }
    if (sum != a.value) return false;
  }
  return j == beta.length();
}

std::vector<DottedComposition> dotted_downset_elements(const DottedComposition& alpha) {
  auto cuts = refinement_cuts(alpha);
  std::vector<DottedComposition> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cuts.size()); ++mask) {
    out.push_back(refine(alpha, cuts, mask));
  }
  return out;
}

PosetInterval<DottedComposition> dotted_downset(const DottedComposition& alpha) {
  auto cuts = refinement_cuts(alpha);
  return make_interval(dotted_downset_elements(alpha), boolean_covers(cuts.size(), true));
}

bool sc_leq(const SetSupercomposition& I, const SetSupercomposition& J) {
  std::size_t i = 0;
  for (const auto& target : J.blocks()) {
    if (i >= I.length()) return false;
    if (target.fermionic()) {
      if (I[i] != target) return false;
      ++i;
      continue;
    }
    std::size_t covered = 0;
    Value last = 0;
    while (covered < target.nonzero_count()) {
      if (i >= I.length()) return false;
      const auto& b = I[i];
      if (b.fermionic() || b.min_nonzero() <= last) return false;
      for (Value v : b.nonzero()) {
        if (!target.contains(v)) return false;
      }
      covered += b.nonzero_count();
      last = b.max_nonzero();
      ++i;
    }
  }
  return i == I.length();
}

std::vector<SetSupercomposition> sc_upset_elements(const SetSupercomposition& I) {
  auto gaps = merge_gaps(I);
  std::vector<SetSupercomposition> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gaps.size()); ++mask) {
    out.push_back(merge_at(I, gaps, mask));
  }
  return out;
}

PosetInterval<SetSupercomposition> sc_upset(const SetSupercomposition& I) {
  auto gaps = merge_gaps(I);
  return make_interval(sc_upset_elements(I), boolean_covers(gaps.size(), false));
}

std::uint64_t inversion_mask(const SetSupercomposition& I) { return word_inversion_mask(w_of(I)); }

bool weak_leq(const SetSupercomposition& I, const SetSupercomposition& J) {
  if (!is_superpermutation(I) || !is_superpermutation(J)) return false;
  if (alpha_of(I) != alpha_of(J)) return false;
  return subset(inversion_mask(I), inversion_mask(J));
}

std::vector<SetSupercomposition> alpha_fiber(const SetSupercomposition& I) {
  require_superpermutation(I);
  std::vector<std::pair<bool, std::size_t>> shape;
  std::size_t n = 0;
  for (const auto& b : I.blocks()) {
    shape.emplace_back(b.fermionic(), b.nonzero_count());
    n += b.nonzero_count();
  }
  std::vector<bool> used(n + 1, false);
  BlockSequence prefix;
  std::vector<SetSupercomposition> out;
  distribute(shape, 0, used, prefix, out);
  return out;
}

std::pair<SetSupercomposition, SetSupercomposition> fiber_bounds(const DottedComposition& sigma) {
  for (const auto& p : sigma.parts()) {
    if (!p.dotted && p.value != 1) {
      throw AxiomError("fiber_bounds needs every plain part equal to 1, got " + to_string(sigma));
    }
  }
  const Value n = sigma.weight();
  BlockSequence low, high;
  Value next_low = 1;
  Value next_high = n;
  for (const auto& p : sigma.parts()) {
    std::vector<Value> lo, hi;
    if (p.dotted) {
      lo.push_back(0);
      hi.push_back(0);
    }
    for (Value t = 0; t < p.value; ++t) lo.push_back(next_low++);
    Value start = next_high + 1 - p.value;
    for (Value v = start; v <= next_high; ++v) hi.push_back(v);
    next_high = start - 1;
    low.emplace_back(std::move(lo));
    high.emplace_back(std::move(hi));
  }
  return {SetSupercomposition::trusted(std::move(low)), SetSupercomposition::trusted(std::move(high))};
}

PosetInterval<SetSupercomposition> weak_interval(const SetSupercomposition& I,
                                                 const SetSupercomposition& J) {
  if (!weak_leq(I, J)) {
    throw std::invalid_argument(to_string(I) + " is not below " + to_string(J) + " in the weak order");
  }
  const auto lo = inversion_mask(I);
  const auto hi = inversion_mask(J);
  std::vector<SetSupercomposition> elems;
  std::vector<std::uint64_t> masks;
  for (auto& K : alpha_fiber(I)) {
    auto m = inversion_mask(K);
    if (subset(lo, m) && subset(m, hi)) {
      elems.push_back(std::move(K));
      masks.push_back(m);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (std::popcount(masks[b]) == std::popcount(masks[a]) + 1 && subset(masks[a], masks[b])) {
        covers.emplace_back(a, b);
      }
    }
  }
  return make_interval(std::move(elems), covers);
}

namespace {

// mu(first, x) over elements sorted by length, where element 0 is the bottom.
std::vector<long long> mobius_by_masks(const std::vector<std::uint64_t>& masks) {
  std::vector<long long> mu(masks.size(), 0);
  for (std::size_t y = 0; y < masks.size(); ++y) {
    if (y == 0) {
      mu[y] = 1;
      continue;
    }
    long long s = 0;
    for (std::size_t z = 0; z < y; ++z) {
      if (masks[z] != masks[y] && subset(masks[z], masks[y])) s += mu[z];
    }
    mu[y] = -s;
  }
  return mu;
}

std::vector<std::pair<SetSupercomposition, std::uint64_t>> sorted_between(const SetSupercomposition& I,
                                                                         std::uint64_t lo,
                                                                         std::uint64_t hi) {
  std::vector<std::pair<SetSupercomposition, std::uint64_t>> items;
  for (auto& K : alpha_fiber(I)) {
    auto m = inversion_mask(K);
    if (subset(lo, m) && subset(m, hi)) items.emplace_back(std::move(K), m);
  }
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return std::popcount(a.second) < std::popcount(b.second);
  });
  return items;
}

}  // namespace

std::vector<std::pair<SetSupercomposition, long long>> weak_mobius_row(const SetSupercomposition& I) {
  require_superpermutation(I);
  auto items = sorted_between(I, inversion_mask(I), ~std::uint64_t{0});
  std::vector<std::uint64_t> masks;
  for (const auto& it : items) masks.push_back(it.second);
  auto mu = mobius_by_masks(masks);
  std::vector<std::pair<SetSupercomposition, long long>> out;
  for (std::size_t i = 0; i < items.size(); ++i) out.emplace_back(std::move(items[i].first), mu[i]);
  return out;
}

std::vector<SetSupercomposition> weak_upset(const SetSupercomposition& I) {
  require_superpermutation(I);
  std::vector<SetSupercomposition> out;
  for (auto& [K, m] : sorted_between(I, inversion_mask(I), ~std::uint64_t{0})) out.push_back(std::move(K));
  return out;
}

long long mobius_weak(const SetSupercomposition& I, const SetSupercomposition& J) {
  if (!weak_leq(I, J)) return 0;
  auto items = sorted_between(I, inversion_mask(I), inversion_mask(J));
  std::vector<std::uint64_t> masks;
  for (const auto& it : items) masks.push_back(it.second);
  auto mu = mobius_by_masks(masks);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].first == J) return mu[i];
  }
  return 0;
}

}  // namespace superhopf
