#pragma once

// Text, structured (JSON) and DOT renderings.
//
// Text: one term per line, `<signed coefficient> * <basis>[<index>]`, tensors
// as `<signed coefficient> * <basis>[<a>] # <basis>[<b>]`, sorted by the text
// after the coefficient. The zero combination prints as `0`.

#include <string>

#include "superhopf/combination.hpp"
#include "superhopf/posets.hpp"

namespace superhopf {

std::string to_text(const NcCombination& x);
std::string to_text(const CCombination& x);
std::string to_text(const NcTensor& x);

/// JSON mirroring to_text term by term.
std::string to_structured(const NcCombination& x);
std::string to_structured(const CCombination& x);
std::string to_structured(const NcTensor& x);

template <class T>
std::string emit_dot(const PosetInterval<T>& P) {
  std::string out = "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < P.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + to_string(P.elements[i]) + "\"];\n";
  }
  for (auto [lo, hi] : P.covers) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace superhopf
