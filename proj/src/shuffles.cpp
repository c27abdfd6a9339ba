#include <functional>

#include "superhopf/hopf.hpp"

namespace superhopf {

namespace {

struct Slot {
  Block block;
  bool left;  // comes from the first factor
};

// Visits every interleaving of I and shift(J, n) together with its sign, the
// parity of the number of J-fermionic blocks standing before I-fermionic ones.
void for_each_shuffle(const SetSupercomposition& I, const SetSupercomposition& J,
                      const std::function<void(const std::vector<Slot>&, int)>& visit) {
  const Value n = static_cast<Value>(I.bidegree().n);
  BlockSequence shifted = shift(J.blocks(), n);
  std::vector<Slot> seq;
  seq.reserve(I.length() + J.length());
  std::function<void(std::size_t, std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j,
                                                                            std::size_t j_fermions,
                                                                            int sign) {
    if (i == I.length() && j == shifted.size()) {
      visit(seq, sign);
      return;
    }
    if (i < I.length()) {
      int s = sign;
      if (I[i].fermionic() && j_fermions % 2 == 1) s = -s;
      seq.push_back({I[i], true});
      rec(i + 1, j, j_fermions, s);
      seq.pop_back();
    }
    if (j < shifted.size()) {
      seq.push_back({shifted[j], false});
      rec(i, j + 1, j_fermions + (shifted[j].fermionic() ? 1 : 0), sign);
      seq.pop_back();
    }
  };
  rec(0, 0, 0, 1);
}

}  // namespace

std::vector<SignedIndex> quasi_shuffles(const SetSupercomposition& I, const SetSupercomposition& J) {
  std::vector<SignedIndex> out;
  for_each_shuffle(I, J, [&](const std::vector<Slot>& seq, int sign) {
    // Each I-block immediately followed by a J-block may merge with it,
    // unless both are fermionic.
    BlockSequence blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
      if (p == seq.size()) {
        out.push_back({SetSupercomposition::trusted(blocks), sign});
        return;
      }
      blocks.push_back(seq[p].block);
      rec(p + 1);
      blocks.pop_back();
      if (p + 1 < seq.size() && seq[p].left && !seq[p + 1].left &&
          !(seq[p].block.fermionic() && seq[p + 1].block.fermionic())) {
        blocks.push_back(seq[p].block.merged(seq[p + 1].block));
        rec(p + 2);
        blocks.pop_back();
      }
    };
    rec(0);
  });
  return out;
}

std::vector<SignedIndex> super_shuffles(const SetSupercomposition& I, const SetSupercomposition& J) {
  std::vector<SignedIndex> out;
  for_each_shuffle(I, J, [&](const std::vector<Slot>& seq, int sign) {
    BlockSequence blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
      if (p == seq.size()) {
        out.push_back({SetSupercomposition::trusted(blocks), sign});
        return;
      }
      const Slot& head = seq[p];
      blocks.push_back(head.block);
      rec(p + 1);
      blocks.pop_back();
      if (head.left && head.block.fermionic()) {
        // I-fermionic block absorbing an increasing run of J non-fermionic blocks.
        Block merged = head.block;
        Value last = 0;
        for (std::size_t q = p + 1; q < seq.size(); ++q) {
          const Slot& s = seq[q];
          if (s.left || s.block.fermionic() || s.block.min_nonzero() <= last) break;
          merged = merged.merged(s.block);
          last = s.block.max_nonzero();
          blocks.push_back(merged);
          rec(q + 1);
          blocks.pop_back();
        }
      } else if (head.left) {
        // Increasing run of I non-fermionic blocks absorbed by a J-fermionic block.
        Block merged = head.block;
        Value last = head.block.max_nonzero();
        for (std::size_t q = p + 1; q < seq.size(); ++q) {
          const Slot& s = seq[q];
          if (!s.left) {
            if (s.block.fermionic()) {
              blocks.push_back(merged.merged(s.block));
              rec(q + 1);
              blocks.pop_back();
            }
            break;
          }
          if (s.block.fermionic() || s.block.min_nonzero() <= last) break;
          merged = merged.merged(s.block);
          last = s.block.max_nonzero();
        }
      }
    };
    rec(0);
  });
  return out;
}

}  // namespace superhopf
