#pragma once

#include <cstdint>

#include "parkfn/counting.hpp"
#include "parkfn/prefseq.hpp"

namespace parkfn {

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Rational exact_value;  // closed-form expectation for the same parameters
};

struct EstimateOptions {
  int threads = 1;
};

// Sample mean of the m-cycle count over uniform parking functions (classical
// or prime), with its standard error. Samples are drawn in fixed-size blocks
// seeded independently from the master seed, and the per-block tallies are
// exact integers, so the result is identical for any thread count.
// Throws std::domain_error for the rk variant or samples < 2.
Estimate estimate_expected_cycles(int n, int m, Variant variant, std::uint64_t samples,
                                  std::uint64_t seed, const EstimateOptions& options = {});

}  // namespace parkfn
