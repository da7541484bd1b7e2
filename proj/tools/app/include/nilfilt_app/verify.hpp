#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nilfilt::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
};

struct Criterion {
  int id = 0;
  std::string title;
  double limit_seconds = 0;
  double seconds = 0;
  bool pass = false;
  std::vector<Check> checks;
};

struct Options {
  bool slow = false;  // include the long direct-SNF cross-checks
  unsigned jobs = 1;
  std::uint64_t seed = 20240611;
};

inline constexpr int kCriterionCount = 11;

Criterion run_criterion(int id, const Options& opt);

// "counts", "homology", "tc" or "all". Throws ValidationError otherwise.
std::vector<int> suite_criteria(std::string_view suite);

// One summary line, then one indented line per failing check.
std::string format_criterion(const Criterion& c);

}  // namespace nilfilt::verify
