#include "nekrasov/verifier.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "nekrasov/errors.hpp"
#include "nekrasov/parallel.hpp"

namespace nekrasov {

namespace {

std::vector<LinearForm> collect_poles(const SeriesCombination& lhs, const SeriesCombination& rhs) {
  std::vector<LinearForm> out;
  for (const auto* side : {&lhs, &rhs}) {
    for (const auto& [c, s] : *side) {
      auto forms = s->pole_forms();
      out.insert(out.end(), forms.begin(), forms.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational evaluate(const SeriesCombination& side, long grade, const EvalPoint& p) {
  Rational sum;
  for (const auto& [c, s] : side) {
    if (s->in_support(grade)) sum += c * s->evaluate(grade, p);
  }
  return sum;
}

long support_base(const SeriesCombination& side) {
  long base = side.front().second->base();
  for (const auto& [c, s] : side) base = std::min(base, s->base());
  return base;
}

long support_max(const SeriesCombination& side) {
  long top = side.front().second->max_grade();
  for (const auto& [c, s] : side) top = std::min(top, s->max_grade());
  return top;
}

struct TrialResult {
  SampledPoint sample;
  std::vector<TrialRecord> records;
};

long prefactor_levels(const FrameData& frame, long max4n) { return (max4n - frame.w1()) / 4; }

}  // namespace

VerificationReport compare_series(std::string name, const FrameData& frame, HalfInt k, long max4n,
                                  const SeriesCombination& lhs, const SeriesCombination& rhs,
                                  const SampleConfig& cfg, int threads) {
  if (lhs.empty() || rhs.empty()) throw std::invalid_argument("empty side in comparison");
  VerificationReport report;
  report.check = std::move(name);
  report.frame = frame;
  report.k = k;
  report.max4n = max4n;
  report.seed = cfg.seed;
  report.trials = cfg.trials;

  const long base = std::min(support_base(lhs), support_base(rhs));
  const long top = std::min({support_max(lhs), support_max(rhs), max4n});
  std::vector<long> grades;
  for (long g = base; g <= top; g += 4) grades.push_back(g);
  const auto poles = collect_poles(lhs, rhs);

  auto results = parallel_map(static_cast<std::size_t>(cfg.trials), threads, [&](std::size_t t) {
    TrialResult result;
    // A pole missed by the collected forms surfaces as PoleError and the
    // draw is rejected like any other.
    result.sample = sample_point(cfg, static_cast<int>(t), frame.rank(), poles,
                                 [&](const EvalPoint& p) {
                                   std::vector<TrialRecord> records;
                                   try {
                                     for (long g : grades) {
                                       TrialRecord rec{evaluate(lhs, g, p), evaluate(rhs, g, p)};
                                       rec.equal = rec.lhs == rec.rhs;
                                       records.push_back(std::move(rec));
                                     }
                                   } catch (const PoleError&) {
                                     return false;
                                   }
                                   result.records = std::move(records);
                                   return true;
                                 });
    return result;
  });

  report.pass = true;
  for (std::size_t gi = 0; gi < grades.size(); ++gi) {
    GradeRecord rec{grades[gi], {}};
    for (const auto& r : results) {
      rec.trials.push_back(r.records[gi]);
      report.pass = report.pass && r.records[gi].equal;
    }
    report.grades.push_back(std::move(rec));
  }
  for (auto& r : results) {
    report.points.push_back(std::move(r.sample.point));
    report.resamples.push_back(r.sample.resamples);
  }
  return report;
}

VerificationReport compare_series(std::string name, const FrameData& frame, HalfInt k, long max4n,
                                  const QSeries& lhs, const QSeries& rhs, const SampleConfig& cfg,
                                  int threads) {
  return compare_series(std::move(name), frame, k, max4n, SeriesCombination{{Rational(1), &lhs}},
                        SeriesCombination{{Rational(1), &rhs}}, cfg, threads);
}

std::vector<VerificationReport> check_main(const FrameData& frame, HalfInt k, long max4n,
                                           const SampleConfig& cfg, int threads) {
  frame.require_admissible(k);
  const SeriesOptions flipped{SubstitutionRule::negate_eps(), threads};
  const SeriesOptions plain{SubstitutionRule::identity(), threads};
  const QSeries lhs = series_Z_X1(frame, k, max4n, flipped);
  std::vector<VerificationReport> out;
  if (k >= HalfInt()) {
    const QSeries rhs = series_mul(series_prefactor(frame.rank(), +1, prefactor_levels(frame, max4n)),
                                   series_Z_X0(frame, k, max4n, plain));
    out.push_back(compare_series("main_k_ge_0", frame, k, max4n, lhs, rhs, cfg, threads));
  }
  if (k <= HalfInt()) {
    const QSeries rhs = series_Z_X0(frame, k, max4n, flipped);
    out.push_back(compare_series("main_k_le_0", frame, k, max4n, lhs, rhs, cfg, threads));
  }
  return out;
}

VerificationReport check_factorization(const FrameData& frame, HalfInt k, long max4n,
                                       const SampleConfig& cfg, int threads) {
  const QSeries direct = series_Z_X1(frame, k, max4n, {SubstitutionRule::identity(), threads});
  const QSeries factored = series_Z_X1_factorized(frame, k, max4n, threads);
  return compare_series("mult", frame, k, max4n, direct, factored, cfg, threads);
}

std::vector<VerificationReport> check_symmetry(const FrameData& frame, HalfInt k, long max4n,
                                               const SampleConfig& cfg, int threads) {
  const SeriesOptions negated{SubstitutionRule::negate_all(frame.rank()), threads};
  const SeriesOptions plain{SubstitutionRule::identity(), threads};
  std::vector<VerificationReport> out;
  out.push_back(compare_series("symmetry_x0", frame, k, max4n,
                               series_Z_X0(frame, k, max4n, negated),
                               series_Z_X0(frame, k, max4n, plain), cfg, threads));
  out.push_back(compare_series("symmetry_x1", frame, k, max4n,
                               series_Z_X1(frame, k, max4n, negated),
                               series_Z_X1(frame, k, max4n, plain), cfg, threads));
  return out;
}

VerificationReport check_recursion_must(const FrameData& frame, HalfInt k, long max4n,
                                        const SampleConfig& cfg, int threads) {
  if (k < HalfInt()) throw std::invalid_argument("recursion check requires k >= 0");
  frame.require_admissible(k);
  const QSeries alpha = series_Z_X1(frame, k, max4n, {SubstitutionRule::identity(), threads});
  const QSeries beta =
      series_Z_X0(frame, k, max4n, {SubstitutionRule::negate_a_m(frame.rank()), threads});
  const QSeries rhs =
      series_mul(series_rising_prefactor(frame.rank(), prefactor_levels(frame, max4n)), beta);
  return compare_series("must", frame, k, max4n, alpha, rhs, cfg, threads);
}

VerificationReport check_branch_guard(const FrameData& frame, long max4n, const SampleConfig& cfg,
                                      int threads) {
  const HalfInt k;
  frame.require_admissible(k);
  const QSeries plain = series_Z_X0(frame, k, max4n, {SubstitutionRule::identity(), threads});
  const QSeries flipped = series_Z_X0(frame, k, max4n, {SubstitutionRule::negate_eps(), threads});
  const QSeries corrected =
      series_mul(series_prefactor(frame.rank(), +1, prefactor_levels(frame, max4n)), plain);
  VerificationReport report = compare_series(
      "main_k0_guard", frame, k, max4n,
      SeriesCombination{{Rational(1), &flipped}, {Rational(-1), &plain}},
      SeriesCombination{{Rational(1), &corrected}, {Rational(-1), &plain}}, cfg, threads);
  for (int t = 0; t < report.trials; ++t) {
    bool nonzero = false;
    for (const auto& g : report.grades) {
      if (g.grade4n > plain.base() && !g.trials[t].lhs.is_zero()) nonzero = true;
    }
    report.pass = report.pass && nonzero;
  }
  return report;
}

}  // namespace nekrasov
