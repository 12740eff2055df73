// The acceptance checks, one named result per criterion.

#ifndef HESSE_MOORE_VERIFY_HPP_
#define HESSE_MOORE_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hesse_moore {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double milliseconds = 0;
};

struct VerifyConfig {
  std::uint64_t small_prime = 7;  // exhaustive checks
  std::uint64_t large_prime = 13; // sampled and exhaustive pair checks
  std::uint64_t seed = default_seed;
  bool parallel = true;

  static constexpr std::uint64_t default_seed = 20240607;
};

// HESSE_MOORE_SEED if set and numeric, otherwise the default seed.
std::uint64_t seed_from_environment();

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(const VerifyConfig&)> run;
};

const std::vector<Criterion>& acceptance_criteria();

// Runs every criterion; exceptions become failed results. Results are in id order.
std::vector<CriterionResult> run_acceptance(const VerifyConfig& config);

} // namespace hesse_moore

#endif
