#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nekrasov/fixed_points.hpp"
#include "nekrasov/half_int.hpp"
#include "nekrasov/sampling.hpp"
#include "nekrasov/series.hpp"

namespace nekrasov {

struct TrialRecord {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

struct GradeRecord {
  long grade4n = 0;
  std::vector<TrialRecord> trials;
};

struct VerificationReport {
  std::string check;
  FrameData frame{1, 0};
  HalfInt k;
  long max4n = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<EvalPoint> points;
  std::vector<int> resamples;
  std::vector<GradeRecord> grades;
  bool pass = false;
};

/// Formal combination sum c_i S_i of series, evaluated termwise.
using SeriesCombination = std::vector<std::pair<Rational, const QSeries*>>;

/// Grade-by-grade comparison of two combinations at cfg.trials sample
/// points. Grades run over the common support of both sides. Pole forms are
/// the union of the denominator forms of every series involved.
VerificationReport compare_series(std::string name, const FrameData& frame, HalfInt k, long max4n,
                                  const SeriesCombination& lhs, const SeriesCombination& rhs,
                                  const SampleConfig& cfg, int threads = 1);

VerificationReport compare_series(std::string name, const FrameData& frame, HalfInt k, long max4n,
                                  const QSeries& lhs, const QSeries& rhs, const SampleConfig& cfg,
                                  int threads = 1);

/// k > 0: one report "main_k_ge_0"; k < 0: one report "main_k_le_0"; k = 0:
/// both.
std::vector<VerificationReport> check_main(const FrameData& frame, HalfInt k, long max4n,
                                           const SampleConfig& cfg, int threads = 1);

/// Direct resolution sum against the product formula. Report "mult".
VerificationReport check_factorization(const FrameData& frame, HalfInt k, long max4n,
                                       const SampleConfig& cfg, int threads = 1);

/// Reports "symmetry_x0" and "symmetry_x1".
std::vector<VerificationReport> check_symmetry(const FrameData& frame, HalfInt k, long max4n,
                                               const SampleConfig& cfg, int threads = 1);

/// The rising-factorial recursion between the resolution series and the
/// quotient series with (a, m) -> (-a, -m). Report "must". Requires k >= 0.
VerificationReport check_recursion_must(const FrameData& frame, HalfInt k, long max4n,
                                        const SampleConfig& cfg, int threads = 1);

/// Branch consistency at k = 0. The left side is Z_X0(-eps) - Z_X0(eps), the
/// right side is (prefactor - 1) Z_X0(eps). Passes iff they agree everywhere
/// and the difference is nonzero at some grade above the base for every
/// trial. Report "main_k0_guard".
VerificationReport check_branch_guard(const FrameData& frame, long max4n, const SampleConfig& cfg,
                                      int threads = 1);

}  // namespace nekrasov
