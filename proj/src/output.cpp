#include "superhopf/output.hpp"

#include <algorithm>
#include <json.hpp>
#include <limits>

#include "superhopf/text.hpp"

namespace superhopf {

namespace {

using nlohmann::json;

std::string signed_str(const Coeff& c) { return c > 0 ? "+" + c.str() : c.str(); }

std::string term(Basis b, const SetSupercomposition& I) { return basis_name(b) + "[" + to_string(I) + "]"; }
std::string term(Basis b, const DottedComposition& a) { return basis_name(b) + "[" + to_string(a) + "]"; }

json coeff_json(const Coeff& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

json index_json(const SetSupercomposition& I) {
  json blocks = json::array();
  for (const auto& b : I.blocks()) {
    json elems = json::array();
    for (Value v : b.elements()) elems.push_back(v);
    blocks.push_back(elems);
  }
  return blocks;
}

json index_json(const DottedComposition& a) {
  json parts = json::array();
  for (const auto& p : a.parts()) parts.push_back({{"value", p.value}, {"dotted", p.dotted}});
  return parts;
}

struct Line {
  std::string key;
  Coeff c;
  json entry;
};

std::string render_text(std::vector<Line> lines) {
  if (lines.empty()) return "0\n";
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.key < b.key; });
  std::string out;
  for (const auto& l : lines) out += signed_str(l.c) + " * " + l.key + "\n";
  return out;
}

std::string render_json(Basis b, std::vector<Line> lines, bool tensor) {
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.key < b.key; });
  json terms = json::array();
  for (auto& l : lines) terms.push_back(std::move(l.entry));
  json doc{{"basis", basis_name(b)}, {"tensor", tensor}, {"terms", std::move(terms)}};
  return doc.dump() + "\n";
}

template <class Index>
std::vector<Line> lines_of(const Combination<Index>& x) {
  std::vector<Line> lines;
  for (const auto& [I, c] : x.terms()) {
    lines.push_back({term(x.basis(), I), c, json{{"coefficient", coeff_json(c)}, {"index", index_json(I)}}});
  }
  return lines;
}

std::vector<Line> lines_of(const NcTensor& x) {
  std::vector<Line> lines;
  for (const auto& [key, c] : x.terms()) {
    lines.push_back({term(x.basis(), key.first) + " # " + term(x.basis(), key.second), c,
                     json{{"coefficient", coeff_json(c)},
                          {"left", index_json(key.first)},
                          {"right", index_json(key.second)}}});
  }
  return lines;
}

}  // namespace

std::string to_text(const NcCombination& x) { return render_text(lines_of(x)); }
std::string to_text(const CCombination& x) { return render_text(lines_of(x)); }
std::string to_text(const NcTensor& x) { return render_text(lines_of(x)); }

std::string to_structured(const NcCombination& x) { return render_json(x.basis(), lines_of(x), false); }
std::string to_structured(const CCombination& x) { return render_json(x.basis(), lines_of(x), false); }
std::string to_structured(const NcTensor& x) { return render_json(x.basis(), lines_of(x), true); }

}  // namespace superhopf
