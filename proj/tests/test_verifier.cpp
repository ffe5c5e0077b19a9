#include <gtest/gtest.h>

#include "nekrasov/errors.hpp"
#include "nekrasov/report.hpp"
#include "nekrasov/verifier.hpp"
#include "support.hpp"

namespace nekrasov {
namespace {

using namespace nekrasov::testing;

HalfInt h(long doubled) { return HalfInt::from_doubled(doubled); }

SampleConfig config(std::uint64_t seed = 161, int trials = 5) {
  SampleConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  return cfg;
}

bool all_pass(const std::vector<VerificationReport>& rs) {
  bool ok = !rs.empty();
  for (const auto& r : rs) ok = ok && r.pass;
  return ok;
}

TEST(Sampling, DeterministicPerSeedAndTrial) {
  const auto cfg = config(42);
  EXPECT_EQ(sample_point(cfg, 3, 2, {}).point, sample_point(cfg, 3, 2, {}).point);
  EXPECT_NE(sample_point(cfg, 3, 2, {}).point, sample_point(cfg, 4, 2, {}).point);
  EXPECT_NE(sample_point(cfg, 3, 2, {}).point, sample_point(config(43), 3, 2, {}).point);
}

TEST(Sampling, RangesAndNoZeroNumerators) {
  const auto cfg = config(7);
  for (int t = 0; t < 200; ++t) {
    const auto s = sample_point(cfg, t, 1, {e1(), e2()});
    EXPECT_EQ(s.resamples, 0);
    for (const auto& [v, value] : s.point.values()) {
      EXPECT_FALSE(value.is_zero());
      EXPECT_LE(value.denominator(), 32);
      EXPECT_LE(abs(value.numerator()), 999);
    }
  }
}

TEST(Sampling, ResampleOnPoleAndExhaustion) {
  const auto cfg = config(5);
  const auto s = sample_point(cfg, 0, 1, {});
  // Vanishes exactly on the first draw, so one redraw is needed.
  SampleConfig c = cfg;
  const LinearForm pole = e2() + LinearForm::constant(-s.point.at(VarIndex::eps2()));
  const auto r = sample_point(c, 0, 1, {pole});
  EXPECT_EQ(r.resamples, 1);
  EXPECT_NE(r.point, s.point);
  c.max_resample = 3;
  EXPECT_THROW(sample_point(c, 0, 1, {LinearForm()}), ResampleExhausted);
  int calls = 0;
  EXPECT_EQ(sample_point(cfg, 0, 1, {}, [&](const EvalPoint&) { return ++calls > 2; }).resamples, 2);
}

TEST(CheckMain, Examples) {
  const auto cfg = config();
  const auto trivial = check_main(FrameData(1, 0), h(0), 0, cfg);
  ASSERT_EQ(trivial.size(), 2u);
  EXPECT_TRUE(all_pass(trivial));
  EXPECT_EQ(trivial[0].grades.size(), 1u);
  EXPECT_EQ(trivial[0].grades[0].trials[0].lhs, Rational(1));

  const auto headline = check_main(FrameData(1, 0), h(0), 8, cfg);
  EXPECT_EQ(headline[0].check, "main_k_ge_0");
  EXPECT_EQ(headline[1].check, "main_k_le_0");
  EXPECT_TRUE(all_pass(headline));

  const auto negative = check_main(FrameData(1, 0), h(-2), 8, cfg);
  ASSERT_EQ(negative.size(), 1u);
  EXPECT_EQ(negative[0].check, "main_k_le_0");
  EXPECT_TRUE(negative[0].pass);

  EXPECT_THROW(check_main(FrameData(1, 1), h(0), 9, cfg), ParityError);
}

TEST(CheckMain, ReportShape) {
  const auto r = check_main(FrameData(0, 1), h(1), 9, config(3, 4)).front();
  EXPECT_EQ(r.trials, 4);
  EXPECT_EQ(r.points.size(), 4u);
  EXPECT_EQ(r.resamples.size(), 4u);
  ASSERT_EQ(r.grades.size(), 3u);
  EXPECT_EQ(r.grades[0].grade4n, 1);
  EXPECT_EQ(r.grades[2].grade4n, 9);
  for (const auto& g : r.grades) {
    ASSERT_EQ(g.trials.size(), 4u);
    for (const auto& t : g.trials) EXPECT_EQ(t.equal, t.lhs == t.rhs);
  }
}

TEST(CheckFactorization, Examples) {
  const auto cfg = config();
  const auto a = check_factorization(FrameData(1, 0), h(2), 4, cfg);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.check, "mult");
  EXPECT_TRUE(check_factorization(FrameData(1, 0), h(0), 8, cfg).pass);
  EXPECT_TRUE(check_factorization(FrameData(1, 1), h(1), 9, cfg).pass);
}

TEST(CheckSymmetry, Examples) {
  const auto cfg = config();
  const auto trivial = check_symmetry(FrameData(1, 0), h(0), 0, cfg);
  EXPECT_TRUE(all_pass(trivial));
  const auto s0 = check_symmetry(FrameData(1, 0), h(0), 8, cfg);
  ASSERT_EQ(s0.size(), 2u);
  EXPECT_EQ(s0[0].check, "symmetry_x0");
  EXPECT_EQ(s0[1].check, "symmetry_x1");
  EXPECT_TRUE(all_pass(s0));
  EXPECT_TRUE(all_pass(check_symmetry(FrameData(1, 0), h(2), 8, cfg)));
}

TEST(CheckMust, Examples) {
  const auto cfg = config();
  const auto base = check_recursion_must(FrameData(1, 0), h(0), 0, cfg);
  EXPECT_TRUE(base.pass);
  EXPECT_EQ(base.grades[0].trials[0].lhs, Rational(1));
  EXPECT_TRUE(check_recursion_must(FrameData(1, 0), h(0), 4, cfg).pass);
  EXPECT_TRUE(check_recursion_must(FrameData(2, 0), h(0), 8, cfg).pass);
  EXPECT_THROW(check_recursion_must(FrameData(1, 0), h(-2), 8, cfg), std::invalid_argument);
}

TEST(CheckMust, SignIsNotVacuous) {
  // Flipping the (-1)^(jr) sign must break the recursion for odd r.
  const FrameData f(1, 0);
  const QSeries alpha = series_Z_X1(f, h(0), 8);
  const QSeries beta = series_Z_X0(f, h(0), 8, {SubstitutionRule::negate_a_m(1)});
  const QSeries wrong = series_mul(series_prefactor(1, +1, 2), beta);
  EXPECT_FALSE(compare_series("must_flipped", f, h(0), 8, alpha, wrong, config()).pass);
}

TEST(BranchGuard, PrefactorTailIsVisible) {
  for (const auto& f : {FrameData(1, 0), FrameData(2, 0)}) {
    const auto r = check_branch_guard(f, 8, config());
    EXPECT_TRUE(r.pass) << report_text(r);
  }
}

// Rebuild `s` with one factor of one term perturbed.
QSeries mutate(const QSeries& s, long grade, std::size_t term, std::size_t factor, bool exponent) {
  QSeries out(s.base(), s.max_grade());
  for (const auto& [g, c] : s.coefficients()) {
    Coefficient copy;
    for (std::size_t i = 0; i < c.terms().size(); ++i) {
      FactoredTerm t = c.terms()[i];
      if (g == grade && i == term) {
        auto fs = t.factors();
        if (exponent) {
          fs[factor].exponent += fs[factor].exponent > 0 ? 1 : -1;
        } else {
          LinearForm bumped = fs[factor].form + a(0);
          if (bumped.is_zero()) bumped = fs[factor].form + Rational(2) * a(0);
          fs[factor].form = bumped;
        }
        t = FactoredTerm(t.scalar(), fs);
      }
      copy.add(t);
    }
    out.add(g, copy);
  }
  return out;
}

TEST(Mutation, SingleFactorPerturbationsAreDetected) {
  const FrameData f(1, 0);
  const HalfInt k = h(0);
  const long max4n = 8;
  const auto cfg = config();
  const QSeries direct = series_Z_X1(f, k, max4n);
  const QSeries factored = series_Z_X1_factorized(f, k, max4n);
  const QSeries flipped = series_Z_X1(f, k, max4n, {SubstitutionRule::negate_eps()});
  const QSeries x0 = series_Z_X0(f, k, max4n);
  const QSeries pref = series_prefactor(1, +1, 2);
  ASSERT_TRUE(compare_series("mult", f, k, max4n, direct, factored, cfg).pass);

  int mutants = 0;
  for (const auto& [g, c] : direct.coefficients()) {
    for (std::size_t i = 0; i < c.terms().size(); ++i) {
      for (std::size_t j = 0; j < c.terms()[i].factors().size(); ++j) {
        for (bool exponent : {false, true}) {
          const QSeries bad = mutate(direct, g, i, j, exponent);
          EXPECT_FALSE(compare_series("mult", f, k, max4n, bad, factored, cfg).pass)
              << g << " " << i << " " << j << " " << exponent;
          ++mutants;
        }
      }
    }
  }
  for (const auto& [g, c] : x0.coefficients()) {
    for (std::size_t i = 0; i < c.terms().size(); ++i) {
      for (std::size_t j = 0; j < c.terms()[i].factors().size(); ++j) {
        for (bool exponent : {false, true}) {
          const QSeries bad = series_mul(pref, mutate(x0, g, i, j, exponent));
          EXPECT_FALSE(compare_series("main", f, k, max4n, flipped, bad, cfg).pass)
              << g << " " << i << " " << j << " " << exponent;
          ++mutants;
        }
      }
    }
  }
  EXPECT_GT(mutants, 40);
}

TEST(Determinism, ThreadCountDoesNotChangeReports) {
  const FrameData f(2, 0);
  const auto cfg = config();
  for (int threads : {2, 8}) {
    EXPECT_EQ(reports_json(check_main(f, h(0), 8, cfg, 1)), reports_json(check_main(f, h(0), 8, cfg, threads)));
    EXPECT_EQ(report_json(check_factorization(f, h(0), 8, cfg, 1)),
              report_json(check_factorization(f, h(0), 8, cfg, threads)));
  }
}

TEST(Report, JsonSchemaFieldOrder) {
  const auto r = check_main(FrameData(1, 0), h(2), 4, config(9, 2)).front();
  const std::string js = report_json(r);
  std::size_t pos = 0;
  for (const char* key : {"\"check\"", "\"w\"", "\"k\"", "\"max_4n\"", "\"seed\"", "\"trials\"",
                          "\"points\"", "\"grades\"", "\"pass\""}) {
    const auto at = js.find(key, pos);
    ASSERT_NE(at, std::string::npos) << key;
    pos = at;
  }
  EXPECT_NE(js.find("\"grade4n\""), std::string::npos);
  EXPECT_NE(js.find("\"lhs\""), std::string::npos);
  EXPECT_NE(js.find("\"k\": \"1\""), std::string::npos);
  EXPECT_NE(js.find("\"eps1\""), std::string::npos);
  EXPECT_NE(js.find("\"m2\""), std::string::npos);
}

}  // namespace
}  // namespace nekrasov
