#include <algorithm>
#include <cctype>

#include "superhopf/kernels.hpp"
#include "superhopf/oracle.hpp"

namespace superhopf {

namespace {

// Merges two theta lists; nullopt if they share an index. The sign counts
// pairs (i in a, j in b) with j < i.
std::optional<std::pair<std::vector<Value>, int>> merge_thetas(const std::vector<Value>& a,
                                                               const std::vector<Value>& b) {
  std::vector<Value> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0, crossings = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      crossings += a.size() - i;
      out.push_back(b[j++]);
    } else {
      return std::nullopt;
    }
  }
  return std::pair{std::move(out), crossings % 2 ? -1 : 1};
}

std::string theta_prefix(const std::vector<Value>& thetas) {
  std::string s;
  for (Value t : thetas) {
    if (!s.empty()) s += ' ';
    s += 't' + std::to_string(t);
  }
  return s;
}

struct Token {
  char kind;  // 't', 'x' or '|'
  Value index = 0;
  Value power = 1;
  std::size_t position = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t p = 0;
  auto number = [&](std::size_t& q) {
    std::size_t start = q;
    std::uint64_t v = 0;
    while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[q] - '0');
      if (v > 1'000'000) throw ParseError("index too large", start);
      ++q;
    }
    if (q == start) throw ParseError("expected a number", q);
    return static_cast<Value>(v);
  };
  while (p < text.size()) {
    char c = text[p];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
      continue;
    }
    Token tok{c, 0, 1, p};
    if (c == '|') {
      ++p;
    } else if (c == 't' || c == 'x') {
      ++p;
      tok.index = number(p);
      if (tok.index == 0) throw ParseError("variable indices start at 1", tok.position);
      if (p < text.size() && text[p] == '^') {
        ++p;
        tok.power = number(p);
      }
    } else if (c == '1' && out.empty()) {
      ++p;
      tok.kind = '1';
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", p);
    }
    out.push_back(tok);
  }
  return out;
}

std::vector<Value> check_thetas(std::vector<Value> thetas, std::size_t position) {
  for (std::size_t i = 1; i < thetas.size(); ++i) {
    if (thetas[i] <= thetas[i - 1]) throw ParseError("thetas must be strictly increasing", position);
  }
  return thetas;
}

}  // namespace

std::optional<std::pair<NcMonomial, int>> mono_mul(const NcMonomial& u, const NcMonomial& v) {
  auto merged = merge_thetas(u.thetas, v.thetas);
  if (!merged) return std::nullopt;
  NcMonomial w{std::move(merged->first), u.word};
  w.word.insert(w.word.end(), v.word.begin(), v.word.end());
  return std::pair{std::move(w), merged->second};
}

std::optional<std::pair<CMonomial, int>> mono_mul(const CMonomial& u, const CMonomial& v) {
  auto merged = merge_thetas(u.thetas, v.thetas);
  if (!merged) return std::nullopt;
  CMonomial w{std::move(merged->first), u.exponents};
  if (w.exponents.size() < v.exponents.size()) w.exponents.resize(v.exponents.size(), 0);
  for (std::size_t i = 0; i < v.exponents.size(); ++i) w.exponents[i] += v.exponents[i];
  return std::pair{std::move(w), merged->second};
}

Value max_index(const NcMonomial& u) {
  Value m = u.thetas.empty() ? 0 : u.thetas.back();
  for (Value x : u.word) m = std::max(m, x);
  return m;
}

Value max_index(const CMonomial& u) {
  Value m = u.thetas.empty() ? 0 : u.thetas.back();
  return std::max(m, static_cast<Value>(u.exponents.size()));
}

std::string to_string(const NcMonomial& u) {
  std::string s = theta_prefix(u.thetas);
  if (!u.word.empty()) {
    if (!s.empty()) s += " |";
    for (Value x : u.word) {
      if (!s.empty()) s += ' ';
      s += 'x' + std::to_string(x);
    }
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const CMonomial& u) {
  std::string s = theta_prefix(u.thetas);
  for (std::size_t i = 0; i < u.exponents.size(); ++i) {
    if (u.exponents[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += 'x' + std::to_string(i + 1);
    if (u.exponents[i] > 1) s += '^' + std::to_string(u.exponents[i]);
  }
  return s.empty() ? "1" : s;
}

NcMonomial parse_nc_monomial(std::string_view text) {
  NcMonomial u;
  bool in_word = false;
  for (const auto& tok : tokenize(text)) {
    switch (tok.kind) {
      case '1': break;
      case '|': in_word = true; break;
      case 't':
        if (in_word || !u.word.empty()) throw ParseError("thetas must precede the word", tok.position);
        if (tok.power != 1) throw ParseError("theta powers vanish", tok.position);
        u.thetas.push_back(tok.index);
        break;
      default:
        in_word = true;
        for (Value r = 0; r < tok.power; ++r) u.word.push_back(tok.index);
    }
  }
  u.thetas = check_thetas(std::move(u.thetas), 0);
  return u;
}

CMonomial parse_c_monomial(std::string_view text) {
  CMonomial u;
  for (const auto& tok : tokenize(text)) {
    switch (tok.kind) {
      case '1': break;
      case '|': throw ParseError("'|' only appears in noncommutative monomials", tok.position);
      case 't':
        if (tok.power != 1) throw ParseError("theta powers vanish", tok.position);
        u.thetas.push_back(tok.index);
        break;
      default:
        if (u.exponents.size() < tok.index) u.exponents.resize(tok.index, 0);
        u.exponents[tok.index - 1] += tok.power;
    }
  }
  while (!u.exponents.empty() && u.exponents.back() == 0) u.exponents.pop_back();
  u.thetas = check_thetas(std::move(u.thetas), 0);
  return u;
}

NcPoly multiply(const NcPoly& f, const NcPoly& g) { return kernels::multiply_parallel(f, g); }
CPoly multiply(const CPoly& f, const CPoly& g) { return kernels::multiply_parallel(f, g); }

CPoly commutative_image(const NcPoly& f) {
  CPoly out(f.N);
  for (const auto& [u, c] : f.terms) {
    CMonomial v{u.thetas, {}};
    for (Value x : u.word) {
      if (v.exponents.size() < x) v.exponents.resize(x, 0);
      ++v.exponents[x - 1];
    }
    out.add(v, c);
  }
  return out;
}

}  // namespace superhopf
