#pragma once

// Named self-check suites run by `superhopf verify`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace superhopf {

struct SuiteReport {
  std::string suite;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool ok() const noexcept { return failed == 0; }
  void record(bool ok, const std::string& what);
};

struct VerifyOptions {
  std::size_t max_size = 4;
  std::uint64_t seed = 20240611;
  std::size_t product_samples = 200;
  std::size_t coproduct_samples = 100;
  std::size_t random_pairs = 60;
  std::size_t random_triples = 60;
};

/// paper-examples, hopf-axioms, oracle-products, actions, posets.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace superhopf
