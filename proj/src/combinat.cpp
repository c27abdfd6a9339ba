#include "superhopf/combinat.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "superhopf/text.hpp"

namespace superhopf {

DottedComposition::DottedComposition(std::vector<DottedPart> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!parts_[i].dotted && parts_[i].value == 0) {
      throw AxiomError("plain part " + std::to_string(i + 1) + " of a dotted composition must be positive");
    }
  }
}

Value DottedComposition::weight() const noexcept {
  Value w = 0;
  for (const auto& p : parts_) w += p.value;
  return w;
}

std::size_t DottedComposition::dotted_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(parts_.begin(), parts_.end(), [](const DottedPart& p) { return p.dotted; }));
}

Block::Block(std::vector<Value> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw AxiomError("blocks must be nonempty");
  std::sort(elems_.begin(), elems_.end());
  auto dup = std::adjacent_find(elems_.begin(), elems_.end());
  if (dup != elems_.end()) {
    throw AxiomError("element " + std::to_string(*dup) + " repeated inside a block");
  }
}

bool Block::contains(Value v) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

Block Block::shifted(Value n) const {
  std::vector<Value> out(elems_);
  for (auto& v : out) {
    if (v != 0) v += n;
  }
  return Block(Trusted{}, std::move(out));
}

Block Block::merged(const Block& other) const {
  std::vector<Value> out;
  out.reserve(elems_.size() + other.elems_.size());
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out));
  return Block(Trusted{}, std::move(out));
}

SetSupercomposition::SetSupercomposition(BlockSequence blocks) : blocks_(std::move(blocks)) {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.nonzero_count();
  std::vector<bool> seen(n + 1, false);
  for (const auto& b : blocks_) {
    for (Value v : b.nonzero()) {
      if (v > n) {
        throw AxiomError("nonzero elements must form [" + std::to_string(n) + "], found " +
                         std::to_string(v));
      }
      if (seen[v]) throw AxiomError("nonzero element " + std::to_string(v) + " repeated");
      seen[v] = true;
    }
  }
}

Bidegree SetSupercomposition::bidegree() const noexcept {
  Bidegree d;
  for (const auto& b : blocks_) {
    d.n += b.nonzero_count();
    if (b.fermionic()) ++d.m;
  }
  return d;
}

Bidegree bidegree(const SetSupercomposition& I) { return I.bidegree(); }

BlockSequence shift(std::span<const Block> blocks, Value n) {
  BlockSequence out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.shifted(n));
  return out;
}

SetSupercomposition standardize(std::span<const Block> blocks) {
  std::vector<Value> values;
  for (const auto& b : blocks) values.insert(values.end(), b.nonzero().begin(), b.nonzero().end());
  std::sort(values.begin(), values.end());
  auto dup = std::adjacent_find(values.begin(), values.end());
  if (dup != values.end()) {
    throw AxiomError("nonzero element " + std::to_string(*dup) + " repeated");
  }
  BlockSequence out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::vector<Value> relabeled;
    relabeled.reserve(b.elements().size());
    for (Value v : b.elements()) {
      if (v == 0) {
        relabeled.push_back(0);
      } else {
        auto rank = std::lower_bound(values.begin(), values.end(), v) - values.begin();
        relabeled.push_back(static_cast<Value>(rank + 1));
      }
    }
    out.emplace_back(std::move(relabeled));
  }
  return SetSupercomposition::trusted(std::move(out));
}

SetSupercomposition standardized_slice(const SetSupercomposition& I, std::size_t first,
                                       std::size_t last) {
  return standardize(std::span<const Block>(I.blocks()).subspan(first, last - first));
}

bool is_superpermutation(const SetSupercomposition& I) noexcept {
  return std::all_of(I.blocks().begin(), I.blocks().end(),
                     [](const Block& b) { return b.fermionic() || b.nonzero_count() == 1; });
}

namespace {

// min(A \ B) with min(empty) = 0.
Value min_difference(const Block& a, const Block& b) {
  for (Value v : a.elements()) {
    if (!b.contains(v)) return v;
  }
  return 0;
}

}  // namespace

bool is_set_superpartition(const SetSupercomposition& I) noexcept {
  const auto& bs = I.blocks();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      if (bs[i] == bs[j]) return false;
      if (!(min_difference(bs[i], bs[j]) < min_difference(bs[j], bs[i]))) return false;
    }
  }
  return true;
}

void require_superpermutation(const SetSupercomposition& I) {
  if (!is_superpermutation(I)) {
    throw AxiomError("not a superpermutation (every non-fermionic block must be a singleton): " +
                     to_string(I));
  }
}

void require_set_superpartition(const SetSupercomposition& I) {
  if (!is_set_superpartition(I)) {
    throw AxiomError(
        "not a set superpartition (blocks must be distinct and ordered by min(I_i\\I_j) < "
        "min(I_j\\I_i)): " +
        to_string(I));
  }
}

DottedComposition alpha_of(const SetSupercomposition& I) {
  std::vector<DottedPart> parts;
  parts.reserve(I.length());
  for (const auto& b : I.blocks()) {
    parts.push_back({static_cast<Value>(b.nonzero_count()), b.fermionic()});
  }
  return DottedComposition(std::move(parts));
}

std::vector<Value> descent_composition(std::span<const Value> word) {
  std::vector<Value> parts;
  if (word.empty()) return parts;
  Value run = 1;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i - 1] > word[i]) {
      parts.push_back(run);
      run = 0;
    }
    ++run;
  }
  parts.push_back(run);
  return parts;
}

DottedComposition gamma_of(const SetSupercomposition& I) {
  require_superpermutation(I);
  std::vector<DottedPart> parts;
  std::vector<Value> segment;
  auto flush = [&] {
    for (Value a : descent_composition(segment)) parts.push_back({a, false});
    segment.clear();
  };
  for (const auto& b : I.blocks()) {
    if (b.fermionic()) {
      flush();
      parts.push_back({static_cast<Value>(b.nonzero_count()), true});
    } else {
      segment.push_back(b.min_nonzero());
    }
  }
  flush();
  return DottedComposition(std::move(parts));
}

std::vector<Value> w_of(const SetSupercomposition& I) {
  std::vector<Value> word;
  for (const auto& b : I.blocks()) word.insert(word.end(), b.nonzero().begin(), b.nonzero().end());
  return word;
}

std::vector<std::pair<std::size_t, std::size_t>> inversions(std::span<const Value> word) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[i] > word[j]) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t inversion_count(std::span<const Value> word) { return inversions(word).size(); }

std::vector<std::size_t> global_descents(const SetSupercomposition& I) {
  const std::size_t k = I.length();
  // suffix_max[d] = max nonzero element of blocks d..k-1 (0 if none)
  std::vector<Value> suffix_max(k + 1, 0);
  for (std::size_t d = k; d-- > 0;) {
    Value m = I[d].nonzero_count() ? I[d].max_nonzero() : 0;
    suffix_max[d] = std::max(suffix_max[d + 1], m);
  }
  std::vector<std::size_t> out{0};
  Value prefix_min = std::numeric_limits<Value>::max();
  for (std::size_t d = 1; d < k; ++d) {
    if (I[d - 1].nonzero_count()) prefix_min = std::min(prefix_min, I[d - 1].min_nonzero());
    if (prefix_min > suffix_max[d]) out.push_back(d);
  }
  if (k > 0) out.push_back(k);
  return out;
}

SetSupercomposition lift(const DottedComposition& alpha) {
  BlockSequence blocks;
  Value next = 1;
  std::size_t i = 0;
  const auto& parts = alpha.parts();
  while (i < parts.size()) {
    if (parts[i].dotted) {
      std::vector<Value> elems{0};
      for (Value t = 0; t < parts[i].value; ++t) elems.push_back(next++);
      blocks.emplace_back(std::move(elems));
      ++i;
      continue;
    }
    std::size_t j = i;
    Value total = 0;
    while (j < parts.size() && !parts[j].dotted) total += parts[j++].value;
    // Run r takes the r-th interval from the top of [next, next + total).
    Value top = next + total;
    for (std::size_t r = i; r < j; ++r) {
      Value start = top - parts[r].value;
      for (Value v = start; v < top; ++v) blocks.push_back(Block{v});
      top = start;
    }
    next += total;
    i = j;
  }
  return SetSupercomposition::trusted(std::move(blocks));
}

SetSupercomposition block_lift(const DottedComposition& alpha) {
  BlockSequence blocks;
  Value next = 1;
  for (const auto& p : alpha.parts()) {
    std::vector<Value> elems;
    if (p.dotted) elems.push_back(0);
    for (Value t = 0; t < p.value; ++t) elems.push_back(next++);
    blocks.emplace_back(std::move(elems));
  }
  return SetSupercomposition::trusted(std::move(blocks));
}

}  // namespace superhopf
