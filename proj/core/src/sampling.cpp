#include "nekrasov/sampling.hpp"

#include <random>
#include <string>

#include "nekrasov/errors.hpp"

namespace nekrasov {

namespace {

// Uniform on [lo, hi] by rejection, independent of the standard library's
// distribution implementation.
long draw(std::mt19937_64& gen, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational draw_rational(std::mt19937_64& gen, const SampleConfig& cfg) {
  long num = 0;
  while (num == 0) num = draw(gen, cfg.numerator_min, cfg.numerator_max);
  return Rational(num, draw(gen, cfg.denominator_min, cfg.denominator_max));
}

}  // namespace

SampledPoint sample_point(const SampleConfig& cfg, int trial, int rank,
                          const std::vector<LinearForm>& pole_forms,
                          const std::function<bool(const EvalPoint&)>& accept) {
  const auto t = static_cast<std::uint64_t>(trial);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
  std::mt19937_64 gen(seq);
  const auto vars = all_variables(rank);
  for (int attempt = 0; attempt <= cfg.max_resample; ++attempt) {
    SampledPoint out;
    out.resamples = attempt;
    for (const auto& v : vars) out.point.set(v, draw_rational(gen, cfg));
    bool hits_pole = false;
    for (const auto& f : pole_forms) {
      if (f.evaluate(out.point).is_zero()) {
        hits_pole = true;
        break;
      }
    }
    if (!hits_pole && (!accept || accept(out.point))) return out;
  }
  throw ResampleExhausted("no pole-free point for trial " + std::to_string(trial) + " after " +
                          std::to_string(cfg.max_resample) + " resamples");
}

}  // namespace nekrasov
