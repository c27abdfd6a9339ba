#include "superhopf/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "superhopf/enumerate.hpp"
#include "verify_internal.hpp"

namespace superhopf {

void SuiteReport::record(bool ok, const std::string& what) {
  if (ok) {
    ++passed;
    return;
  }
  if (failed == 0) first_failure = what;
  ++failed;
}

std::vector<std::string> suite_names() {
  return {"paper-examples", "hopf-axioms", "oracle-products", "actions", "posets"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  SuiteReport r;
  if (name == "paper-examples") {
    r = detail::paper_examples(options);
  } else if (name == "hopf-axioms") {
    r = detail::hopf_axioms(options);
  } else if (name == "oracle-products") {
    r = detail::oracle_products(options);
  } else if (name == "actions") {
    r = detail::actions(options);
  } else if (name == "posets") {
    r = detail::posets_suite(options);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  r.suite = name;
  return r;
}

namespace detail {

std::vector<std::string> sorted_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  std::sort(lines.begin(), lines.end());
  return lines;
}

void expect_lines(SuiteReport& r, const std::string& name, const std::string& actual,
                  std::vector<std::string> expected) {
  std::sort(expected.begin(), expected.end());
  auto got = sorted_lines(actual);
  if (got == expected) {
    r.record(true, name);
    return;
  }
  std::string msg = name + ": got\n";
  for (const auto& l : got) msg += "  " + l + "\n";
  msg += "expected\n";
  for (const auto& l : expected) msg += "  " + l + "\n";
  r.record(false, msg);
}

void expect_equal(SuiteReport& r, const std::string& name, const std::string& actual,
                  const std::string& expected) {
  r.record(actual == expected, name + ": got '" + actual + "', expected '" + expected + "'");
}

const std::vector<SetSupercomposition>& Sampler::indices(Basis b, std::size_t size) {
  auto key = std::pair{b, size};
  auto it = nc_.find(key);
  if (it != nc_.end()) return it->second;
  std::vector<SetSupercomposition> v;
  switch (b) {
    case Basis::m: v = set_superpartitions_of_size(size); break;
    case Basis::MonF: v = superpermutations_of_size(size); break;
    default: v = set_supercompositions_of_size(size); break;
  }
  return nc_.emplace(key, std::move(v)).first->second;
}

const std::vector<DottedComposition>& Sampler::compositions(std::size_t size) {
  auto it = c_.find(size);
  if (it != c_.end()) return it->second;
  return c_.emplace(size, dotted_compositions_of_size(size)).first->second;
}

std::size_t Sampler::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

SetSupercomposition Sampler::random_index(Basis b, std::size_t max_size) {
  const auto& pool = indices(b, uniform(1, max_size));
  return pool[uniform(0, pool.size() - 1)];
}

DottedComposition Sampler::random_composition(std::size_t max_size) {
  const auto& pool = compositions(uniform(1, max_size));
  return pool[uniform(0, pool.size() - 1)];
}

}  // namespace detail

}  // namespace superhopf
