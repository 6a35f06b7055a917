#pragma once

// Invariant suites behind the `verify` subcommand: contraction certificates,
// coverage, the contraction/Cauchy/extension laws on seeded random samples,
// metric scans of an enumerated sample, and the closed-form identities when
// the configured pair is the two-map px family with a parity matrix.

#include <vector>

#include "unconv/config.hpp"
#include "unconv/metric.hpp"

namespace unconv {

std::vector<MetricReport> run_verification(const RunConfig& config);

inline bool all_passed(const std::vector<MetricReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

}  // namespace unconv
