#include "superhopf/text.hpp"

#include <cctype>
#include <limits>

namespace superhopf {

std::string to_string(const Block& b) {
  std::string s = "{";
  bool first = true;
  for (Value v : b.elements()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  s += '}';
  return s;
}

std::string to_string(std::span<const Block> blocks) {
  if (blocks.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += '|';
    s += to_string(blocks[i]);
  }
  return s;
}

std::string to_string(const SetSupercomposition& I) { return to_string(std::span(I.blocks())); }

std::string to_string(const DottedPart& p) {
  return (p.dotted ? "." : "") + std::to_string(p.value);
}

std::string to_string(const DottedComposition& alpha) {
  if (alpha.empty()) return "e";
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (i) s += ',';
    s += to_string(alpha[i]);
  }
  s += ')';
  return s;
}

std::string word_to_string(std::span<const Value> word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(word[i]);
  }
  return s;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t position() const { return pos_; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Value number() {
    skip_space();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > std::numeric_limits<Value>::max()) fail("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected a nonnegative integer" + found());
    return static_cast<Value>(v);
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Block parse_block(Cursor& cur) {
  std::size_t start = cur.position();
  cur.expect('{');
  std::vector<Value> elems;
  if (cur.peek() == '}') cur.fail("blocks must be nonempty");
  do {
    elems.push_back(cur.number());
  } while (cur.accept(','));
  cur.expect('}');
  try {
    return Block(std::move(elems));
  } catch (const AxiomError& e) {
    throw ParseError(e.what(), start);
  }
}

BlockSequence parse_blocks(Cursor& cur) {
  BlockSequence blocks;
  if (cur.accept('e')) {
    cur.finish();
    return blocks;
  }
  do {
    blocks.push_back(parse_block(cur));
  } while (cur.accept('|'));
  cur.finish();
  return blocks;
}

}  // namespace

BlockSequence parse_block_sequence(std::string_view text) {
  Cursor cur(text);
  auto blocks = parse_blocks(cur);
  // Disjointness of nonzero elements is part of the grammar's contract.
  standardize(blocks);
  return blocks;
}

SetSupercomposition parse_set_supercomposition(std::string_view text) {
  Cursor cur(text);
  return SetSupercomposition(parse_blocks(cur));
}

DottedComposition parse_dotted_composition(std::string_view text) {
  Cursor cur(text);
  std::vector<DottedPart> parts;
  if (cur.accept('e')) {
    cur.finish();
    return DottedComposition();
  }
  cur.expect('(');
  if (!cur.accept(')')) {
    do {
      std::size_t at = cur.position();
      bool dotted = cur.accept('.');
      Value v = cur.number();
      if (!dotted && v == 0) cur.fail("plain parts must be positive", at);
      parts.push_back({v, dotted});
    } while (cur.accept(','));
    cur.expect(')');
  }
  cur.finish();
  return DottedComposition(std::move(parts));
}

std::vector<Value> parse_word(std::string_view text) {
  Cursor cur(text);
  std::vector<Value> word;
  while (!cur.at_end()) word.push_back(cur.number());
  return word;
}

AnyIndex parse_index(std::string_view text) {
  Cursor cur(text);
  char c = cur.peek();
  if (c == '(') return parse_dotted_composition(text);
  if (c == '{' || c == 'e') return parse_set_supercomposition(text);
  cur.fail("expected an index ('e', '{' or '(')");
}

}  // namespace superhopf
