#pragma once

// Random index generators for property tests.

#include <algorithm>
#include <numeric>
#include <random>

#include "superhopf/basis_change.hpp"
#include "superhopf/combinat.hpp"

namespace test_support {

using namespace superhopf;

inline SetSupercomposition random_sc(std::mt19937_64& rng, std::size_t max_n = 8, std::size_t max_m = 3) {
  std::uniform_int_distribution<std::size_t> dn(0, max_n), dm(0, max_m);
  const std::size_t n = dn(rng), m = dm(rng);
  std::vector<Value> values(n);
  std::iota(values.begin(), values.end(), Value{1});
  std::shuffle(values.begin(), values.end(), rng);
  BlockSequence blocks;
  std::vector<Value> cur;
  std::bernoulli_distribution cut(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    cur.push_back(values[i]);
    if (i + 1 == n || cut(rng)) {
      blocks.emplace_back(cur);
      cur.clear();
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size());
    auto at = pick(rng);
    if (at < blocks.size() && !blocks[at].fermionic()) {
      std::vector<Value> e(blocks[at].elements().begin(), blocks[at].elements().end());
      e.push_back(0);
      blocks[at] = Block(e);
    } else {
      blocks.push_back(Block{0});
    }
  }
  std::shuffle(blocks.begin(), blocks.end(), rng);
  return SetSupercomposition(blocks);
}

/// Superpartitions cannot repeat a block, so samples with two {0} blocks are redrawn.
inline SetSupercomposition random_superpartition(std::mt19937_64& rng) {
  for (;;) {
    auto I = random_sc(rng);
    if (std::count(I.blocks().begin(), I.blocks().end(), Block{0}) <= 1) return normalize_superpartition(I).first;
  }
}

inline DottedComposition random_dotted(std::mt19937_64& rng, std::size_t max_len = 6) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Value> val(0, 4);
  std::bernoulli_distribution dot(0.4);
  std::vector<DottedPart> parts(len(rng));
  for (auto& p : parts) {
    p.dotted = dot(rng);
    p.value = val(rng);
    if (!p.dotted && p.value == 0) p.value = 1;
  }
  return DottedComposition(parts);
}

}  // namespace test_support
