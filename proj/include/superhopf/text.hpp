#pragma once

// Shared text grammar:
//   Block                 {a,b,...}
//   SetSupercomposition   B1|B2|...   or  e
//   DottedComposition     (p1,p2,...) with dotted parts written .k, or e
//   permutation word      space-separated integers

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "superhopf/combinat.hpp"

namespace superhopf {

/// Malformed text. position() is the 0-based character offset of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

std::string to_string(const Block& b);
std::string to_string(std::span<const Block> blocks);
std::string to_string(const SetSupercomposition& I);
std::string to_string(const DottedPart& p);
std::string to_string(const DottedComposition& alpha);
std::string word_to_string(std::span<const Value> word);

/// Any block sequence with pairwise-disjoint blocks; no [n] requirement.
BlockSequence parse_block_sequence(std::string_view text);
SetSupercomposition parse_set_supercomposition(std::string_view text);
DottedComposition parse_dotted_composition(std::string_view text);
std::vector<Value> parse_word(std::string_view text);

using AnyIndex = std::variant<DottedComposition, SetSupercomposition>;

/// Dispatches on the first significant character: '(' or '.' gives a dotted
/// composition, '{' or 'e' a set supercomposition.
AnyIndex parse_index(std::string_view text);

}  // namespace superhopf
