#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nekrasov/linear_form.hpp"

namespace nekrasov {

struct SampleConfig {
  std::uint64_t seed = 161;
  int trials = 5;
  long numerator_min = -999;
  long numerator_max = 999;
  long denominator_min = 1;
  long denominator_max = 32;
  int max_resample = 100;
};

struct SampledPoint {
  EvalPoint point;
  int resamples = 0;
};

/// Point for `trial`, a pure function of (cfg.seed, trial, rank). Variables
/// are drawn in the order eps1, eps2, a_1..a_r, m_1..m_2r; numerators avoid 0.
/// A draw on which some pole form vanishes is replaced by the next draw of
/// the same stream, as is a draw rejected by `accept` when one is given.
/// Throws ResampleExhausted after cfg.max_resample redraws.
SampledPoint sample_point(const SampleConfig& cfg, int trial, int rank,
                          const std::vector<LinearForm>& pole_forms,
                          const std::function<bool(const EvalPoint&)>& accept = {});

}  // namespace nekrasov
