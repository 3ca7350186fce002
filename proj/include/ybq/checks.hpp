#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ybq/types.hpp"

namespace ybq {

/// Outcome of one verification check. `pass` is authoritative; for most
/// checks it means residual <= tolerance, for negative controls it means the
/// deliberately broken identity produced a residual ABOVE the threshold.
/// Informational records document formula-vs-canonical comparisons and never
/// fail a run.
struct CheckRecord {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool informational = false;
  std::string anchor;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 100;  // repetitions for randomized checks; 0 skips them
  double tol = 1e-10;
  double tol_berry = 1e-5;
  bool self_test_negative = false;  // sabotage the YBE grid, must turn it red
};

std::vector<CheckRecord> run_verification(const VerifyOptions& opt);

/// True when every non-informational record passed.
bool all_passed(const std::vector<CheckRecord>& records);

}  // namespace ybq
