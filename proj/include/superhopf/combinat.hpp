#pragma once

// Index objects of the superspace Hopf algebras: dotted compositions, blocks,
// set supercompositions and the structural maps between them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace superhopf {

using Value = std::uint32_t;

/// A part of a dotted composition. Plain parts are positive; dotted parts may be 0.
struct DottedPart {
  Value value = 0;
  bool dotted = false;

  friend auto operator<=>(const DottedPart&, const DottedPart&) = default;
};

class DottedComposition {
 public:
  DottedComposition() = default;
  explicit DottedComposition(std::vector<DottedPart> parts);

  const std::vector<DottedPart>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const DottedPart& operator[](std::size_t i) const { return parts_[i]; }

  /// Sum of underlying values (the n of the bidegree).
  Value weight() const noexcept;
  /// Number of dotted parts (the m of the bidegree).
  std::size_t dotted_count() const noexcept;
  /// n + m.
  std::size_t total_size() const noexcept { return weight() + dotted_count(); }
  int parity() const noexcept { return static_cast<int>(dotted_count() % 2); }

  friend auto operator<=>(const DottedComposition&, const DottedComposition&) = default;

 private:
  std::vector<DottedPart> parts_;
};

/// Nonempty finite set of nonnegative integers, stored ascending (so 0 comes first).
class Block {
 public:
  explicit Block(std::vector<Value> elements);
  Block(std::initializer_list<Value> elements) : Block(std::vector<Value>(elements)) {}

  bool fermionic() const noexcept { return elems_.front() == 0; }
  std::span<const Value> elements() const noexcept { return elems_; }
  std::span<const Value> nonzero() const noexcept {
    return std::span<const Value>(elems_).subspan(fermionic() ? 1 : 0);
  }
  std::size_t nonzero_count() const noexcept { return elems_.size() - (fermionic() ? 1 : 0); }
  bool contains(Value v) const noexcept;

  // Both require nonzero_count() > 0.
  Value min_nonzero() const { return nonzero().front(); }
  Value max_nonzero() const { return elems_.back(); }

  /// Adds `n` to every positive element.
  Block shifted(Value n) const;
  /// Union with a block whose nonzero elements are disjoint from ours.
  Block merged(const Block& other) const;

  friend auto operator<=>(const Block&, const Block&) = default;

 private:
  struct Trusted {};
  Block(Trusted, std::vector<Value> sorted) : elems_(std::move(sorted)) {}

  std::vector<Value> elems_;
};

using BlockSequence = std::vector<Block>;

struct Bidegree {
  std::size_t n = 0;  // nonzero elements
  std::size_t m = 0;  // fermionic blocks

  int parity() const noexcept { return static_cast<int>(m % 2); }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Thrown when a block sequence violates an axiom of the index type it is
/// being turned into. The message names the axiom.
class AxiomError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered sequence of blocks whose nonzero elements partition [n].
class SetSupercomposition {
 public:
  SetSupercomposition() = default;
  explicit SetSupercomposition(BlockSequence blocks);

  /// Skips validation; the caller guarantees the invariants.
  static SetSupercomposition trusted(BlockSequence blocks) {
    SetSupercomposition s;
    s.blocks_ = std::move(blocks);
    return s;
  }

  const BlockSequence& blocks() const noexcept { return blocks_; }
  std::size_t length() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }

  Bidegree bidegree() const noexcept;
  std::size_t total_size() const noexcept {
    auto b = bidegree();
    return b.n + b.m;
  }
  int parity() const noexcept { return bidegree().parity(); }

  friend auto operator<=>(const SetSupercomposition&, const SetSupercomposition&) = default;

 private:
  BlockSequence blocks_;
};

Bidegree bidegree(const SetSupercomposition& I);

BlockSequence shift(std::span<const Block> blocks, Value n);

/// Order-preserving relabeling of the nonzero elements onto [n].
/// Throws AxiomError if two blocks share a nonzero element.
SetSupercomposition standardize(std::span<const Block> blocks);

/// Blocks [first, last) of I, standardized.
SetSupercomposition standardized_slice(const SetSupercomposition& I, std::size_t first,
                                       std::size_t last);

bool is_superpermutation(const SetSupercomposition& I) noexcept;
bool is_set_superpartition(const SetSupercomposition& I) noexcept;

/// Throws AxiomError naming the violated condition.
void require_superpermutation(const SetSupercomposition& I);
void require_set_superpartition(const SetSupercomposition& I);

DottedComposition alpha_of(const SetSupercomposition& I);
DottedComposition gamma_of(const SetSupercomposition& I);

/// Nonzero elements read left to right, ascending inside each block.
std::vector<Value> w_of(const SetSupercomposition& I);

/// Position-pair inversions (i < j, w_i > w_j) of a word, 0-based.
std::vector<std::pair<std::size_t, std::size_t>> inversions(std::span<const Value> word);
std::size_t inversion_count(std::span<const Value> word);

std::vector<std::size_t> global_descents(const SetSupercomposition& I);

/// Classical descent composition of a word.
std::vector<Value> descent_composition(std::span<const Value> word);

/// Canonical superpermutation with gamma_of(lift(alpha)) == alpha.
SetSupercomposition lift(const DottedComposition& alpha);

/// One block per part: plain a -> next a values, dotted a -> {0} plus next a values.
/// alpha_of(block_lift(alpha)) == alpha.
SetSupercomposition block_lift(const DottedComposition& alpha);

}  // namespace superhopf
