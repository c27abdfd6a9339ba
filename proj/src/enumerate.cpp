#include "superhopf/enumerate.hpp"

#include <cstdint>
#include <functional>

namespace superhopf {

namespace {

// Builds block sequences over [n] with m fermionic blocks. When `singletons`
// is set, non-fermionic blocks are restricted to one element.
void grow(std::size_t n, std::uint32_t remaining, std::size_t fermionic_left, bool singletons,
          BlockSequence& prefix, std::vector<SetSupercomposition>& out) {
  if (remaining == 0 && fermionic_left == 0) {
    out.push_back(SetSupercomposition::trusted(prefix));
    return;
  }
  // Iterate over submasks of `remaining`, including the empty one.
  for (std::uint32_t sub = remaining;; sub = (sub - 1) & remaining) {
    std::vector<Value> elems;
    for (std::size_t v = 1; v <= n; ++v) {
      if (sub & (1u << (v - 1))) elems.push_back(static_cast<Value>(v));
    }
    if (fermionic_left > 0) {
      std::vector<Value> with_zero{0};
      with_zero.insert(with_zero.end(), elems.begin(), elems.end());
      prefix.emplace_back(std::move(with_zero));
      grow(n, remaining & ~sub, fermionic_left - 1, singletons, prefix, out);
      prefix.pop_back();
    }
    if (!elems.empty() && (!singletons || elems.size() == 1)) {
      prefix.emplace_back(std::move(elems));
      grow(n, remaining & ~sub, fermionic_left, singletons, prefix, out);
      prefix.pop_back();
    }
    if (sub == 0) break;
  }
}

std::vector<SetSupercomposition> build(std::size_t n, std::size_t m, bool singletons) {
  std::vector<SetSupercomposition> out;
  BlockSequence prefix;
  std::uint32_t all = n == 0 ? 0u : ((1u << n) - 1u);
  grow(n, all, m, singletons, prefix, out);
  return out;
}

template <class F>
std::vector<SetSupercomposition> of_size(std::size_t size, F per_bidegree) {
  std::vector<SetSupercomposition> out;
  for (std::size_t m = 0; m <= size; ++m) {
    auto part = per_bidegree(size - m, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

std::vector<SetSupercomposition> set_supercompositions(std::size_t n, std::size_t m) {
  return build(n, m, false);
}

std::vector<SetSupercomposition> set_supercompositions_of_size(std::size_t size) {
  return of_size(size, set_supercompositions);
}

std::vector<SetSupercomposition> superpermutations(std::size_t n, std::size_t m) {
  return build(n, m, true);
}

std::vector<SetSupercomposition> superpermutations_of_size(std::size_t size) {
  return of_size(size, superpermutations);
}

std::vector<SetSupercomposition> set_superpartitions(std::size_t n, std::size_t m) {
  std::vector<SetSupercomposition> out;
  for (auto& I : set_supercompositions(n, m)) {
    if (is_set_superpartition(I)) out.push_back(std::move(I));
  }
  return out;
}

std::vector<SetSupercomposition> set_superpartitions_of_size(std::size_t size) {
  return of_size(size, set_superpartitions);
}

std::vector<DottedComposition> dotted_compositions_of_size(std::size_t size) {
  std::vector<DottedComposition> out;
  std::vector<DottedPart> prefix;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (left == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (std::size_t take = 1; take <= left; ++take) {
      prefix.push_back({static_cast<Value>(take), false});
      rec(left - take);
      prefix.back() = {static_cast<Value>(take - 1), true};
      rec(left - take);
      prefix.pop_back();
    }
  };
  rec(size);
  return out;
}

std::vector<SetSupercomposition> gamma_fiber(const DottedComposition& alpha) {
  std::vector<SetSupercomposition> out;
  for (auto& I : superpermutations(alpha.weight(), alpha.dotted_count())) {
    if (gamma_of(I) == alpha) out.push_back(std::move(I));
  }
  return out;
}

}  // namespace superhopf
