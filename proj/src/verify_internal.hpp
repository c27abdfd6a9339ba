#pragma once

// Helpers shared by the verification suites.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "superhopf/combination.hpp"
#include "superhopf/verify.hpp"

namespace superhopf::detail {

/// Sorted lines of `text` without the trailing newline.
std::vector<std::string> sorted_lines(const std::string& text);

/// Records whether `actual` has exactly the lines `expected` (in any order).
void expect_lines(SuiteReport& r, const std::string& name, const std::string& actual,
                  std::vector<std::string> expected);

void expect_equal(SuiteReport& r, const std::string& name, const std::string& actual,
                  const std::string& expected);

/// Indices of each kind by total size, cached.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  const std::vector<SetSupercomposition>& indices(Basis b, std::size_t size);
  const std::vector<DottedComposition>& compositions(std::size_t size);

  /// Uniform index of the basis with total size in [1, max_size] (size chosen uniformly).
  SetSupercomposition random_index(Basis b, std::size_t max_size);
  DottedComposition random_composition(std::size_t max_size);
  std::size_t uniform(std::size_t lo, std::size_t hi);
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::map<std::pair<Basis, std::size_t>, std::vector<SetSupercomposition>> nc_;
  std::map<std::size_t, std::vector<DottedComposition>> c_;
};

SuiteReport paper_examples(const VerifyOptions& o);
SuiteReport hopf_axioms(const VerifyOptions& o);
SuiteReport oracle_products(const VerifyOptions& o);
SuiteReport actions(const VerifyOptions& o);
SuiteReport posets_suite(const VerifyOptions& o);

}  // namespace superhopf::detail
