#pragma once

#include "cli/expectations.hpp"

#include <string>
#include <vector>

namespace symcurv::cli {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a short summary on success
  double seconds = 0;
};

struct VerifyOptions {
  int normalization_max_rank = 12;
  int oracle_max_rank = 10;
  double table_time_limit_seconds = 10;
};

/// Runs every acceptance check against `e`, in a fixed order.
std::vector<CheckResult> verify_all(const Expectations& e, const VerifyOptions& opts = {});

}  // namespace symcurv::cli
