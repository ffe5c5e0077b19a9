#include <gtest/gtest.h>

#include "nekrasov/errors.hpp"
#include "nekrasov/sampling.hpp"
#include "nekrasov/series.hpp"
#include "support.hpp"

namespace nekrasov {
namespace {

using namespace nekrasov::testing;

HalfInt h(long doubled) { return HalfInt::from_doubled(doubled); }

const EvalPoint kP = point(1, {Rational(3, 7), Rational(-5, 2), Rational(11, 3), Rational(2, 9), Rational(-13, 4)});

Rational E1() { return kP.at(VarIndex::eps1()); }
Rational E2() { return kP.at(VarIndex::eps2()); }
Rational mass_product(const Rational& shift) {
  const Rational a1 = kP.at(VarIndex::a(0));
  return (a1 + kP.at(VarIndex::m(0)) + shift) * (a1 + kP.at(VarIndex::m(1)) + shift);
}
Rational half_sum() { return (E1() + E2()) / Rational(2); }

std::vector<EvalPoint> points(int rank, int n, const std::vector<LinearForm>& poles) {
  SampleConfig cfg;
  cfg.seed = 99;
  std::vector<EvalPoint> out;
  for (int t = 0; t < n; ++t) out.push_back(sample_point(cfg, t, rank, poles).point);
  return out;
}

TEST(SeriesX0, Examples) {
  const FrameData f(1, 0);
  const QSeries z = series_Z_X0(f, h(0), 8);
  EXPECT_EQ(z.evaluate(0, kP), Rational(1));
  EXPECT_EQ(z.evaluate(4, kP), mass_product(-half_sum()) / (Rational(2) * E1() * E2()));
  EXPECT_EQ(series_Z_X0(f, h(2), 8).evaluate(0, kP), Rational(0));
  EXPECT_THROW(series_Z_X0(FrameData(1, 1), h(0), 8), ParityError);
  EXPECT_THROW(series_Z_X0(FrameData(0, 2), h(0), 1), std::invalid_argument);
}

TEST(SeriesX0, NegativeV1ContributesZero) {
  const QSeries z = series_Z_X0(FrameData(1, 0), h(-6), 8);
  EXPECT_TRUE(z.coefficient(0).empty());
  EXPECT_TRUE(z.coefficient(4).empty());
}

TEST(SeriesX1, Examples) {
  const FrameData f(1, 0);
  EXPECT_EQ(series_Z_X1(f, h(0), 8).evaluate(0, kP), Rational(1));
  EXPECT_EQ(series_Z_X1(f, h(2), 8).evaluate(4, kP), mass_product(half_sum()));
  const Rational s0 = -(Rational(2) * E1() + E2() - E1()) / Rational(2);
  const Rational s1 = -(E1() - E2() + Rational(2) * E2()) / Rational(2);
  const Rational expected = mass_product(s0) / ((E2() - E1()) * Rational(2) * E1()) +
                            mass_product(s1) / ((E1() - E2()) * Rational(2) * E2());
  EXPECT_EQ(series_Z_X1(f, h(0), 8).evaluate(4, kP), expected);
}

TEST(SeriesP2, Examples) {
  EXPECT_EQ(series_Z_P2(1, 2).evaluate(0, kP), Rational(1));
  EXPECT_EQ(series_Z_P2(1, 2).evaluate(4, kP), mass_product(-half_sum()) / (E1() * E2()));
  const QSeries sub = series_Z_P2(1, 1, {SubstitutionRule::chart0({h(0)})});
  EXPECT_EQ(sub.evaluate(4, kP), mass_product(-half_sum()) / (Rational(2) * E1() * (E2() - E1())));
}

TEST(URatio, Structure) {
  const FactoredTerm u = u_ratio(2);
  EXPECT_EQ(u.scalar(), Rational(1, 2));
  int negatives = 0;
  for (const auto& f : u.factors()) {
    if (f.exponent < 0) {
      ++negatives;
      EXPECT_EQ(f.exponent, -1);
      EXPECT_TRUE(f.form == e1() || f.form == e2());
    }
  }
  EXPECT_EQ(negatives, 2);
  const Rational expected = (E1() + E2()) *
                            (Rational(2) * kP.at(VarIndex::a(0)) + kP.at(VarIndex::m(0)) + kP.at(VarIndex::m(1))) /
                            (Rational(2) * E1() * E2());
  EXPECT_EQ(u_ratio(1).evaluate(kP), expected);
}

TEST(Prefactor, Examples) {
  const Rational u1 = u_ratio(1).evaluate(kP);
  EXPECT_EQ(series_prefactor(1, +1, 3).evaluate(0, kP), Rational(1));
  EXPECT_EQ(series_prefactor(1, +1, 3).evaluate(4, kP), u1);
  const EvalPoint p2 = point(2, {Rational(3, 7), Rational(-5, 2), Rational(11, 3), Rational(-1, 5),
                                 Rational(2, 9), Rational(-13, 4), Rational(7), Rational(1, 8)});
  const Rational u2 = u_ratio(2).evaluate(p2);
  EXPECT_EQ(series_prefactor(2, +1, 3).evaluate(8, p2), u2 * (u2 - Rational(1)) / Rational(2));
  EXPECT_EQ(series_prefactor(2, +1, 3).evaluate(4, p2), -u2);
  EXPECT_THROW(series_prefactor(1, 0, 3), std::invalid_argument);
}

TEST(Prefactor, InversePair) {
  for (int r = 1; r <= 3; ++r) {
    const QSeries prod = series_mul(series_prefactor(r, +1, 4), series_prefactor(r, -1, 4));
    for (const auto& p : points(r, 3, prod.pole_forms())) {
      EXPECT_EQ(prod.evaluate(0, p), Rational(1));
      for (long g = 4; g <= 16; g += 4) EXPECT_EQ(prod.evaluate(g, p), Rational(0)) << r << " " << g;
    }
  }
}

TEST(Prefactor, RisingEqualsNegativeExponent) {
  for (int r = 1; r <= 3; ++r) {
    const QSeries x = series_rising_prefactor(r, 4);
    const QSeries y = series_prefactor(r, -1, 4);
    for (const auto& p : points(r, 3, x.pole_forms())) {
      for (long g = 0; g <= 16; g += 4) EXPECT_EQ(x.evaluate(g, p), y.evaluate(g, p));
    }
  }
}

TEST(Binomial, Polynomials) {
  const auto b = binomial_polynomial(3);  // x(x-1)(x-2)/6
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(b[0], Rational(0));
  EXPECT_EQ(b[1], Rational(1, 3));
  EXPECT_EQ(b[2], Rational(-1, 2));
  EXPECT_EQ(b[3], Rational(1, 6));
  const auto rp = rising_polynomial(2);  // x(x+1)/2
  EXPECT_EQ(rp[1], Rational(1, 2));
  EXPECT_EQ(rp[2], Rational(1, 2));
}

QSeries one_plus(const FactoredTerm& c, int sign) {
  QSeries s(0, 8);
  s.add(0, FactoredTerm());
  s.add(4, c * FactoredTerm(Rational(sign)));
  return s;
}

TEST(SeriesMul, Examples) {
  const QSeries plane = series_Z_P2(1, 2);
  QSeries unit(0, 8);
  unit.add(0, FactoredTerm());
  const QSeries pu = series_mul(plane, unit);
  for (long g = 0; g <= 8; g += 4) EXPECT_EQ(pu.evaluate(g, kP), plane.evaluate(g, kP));

  const FactoredTerm c(Rational(3), {{e1() + a(0), 1}, {e2(), -1}});
  const QSeries d = series_mul(one_plus(c, +1), one_plus(c, -1));
  const Rational cv = c.evaluate(kP);
  EXPECT_EQ(d.evaluate(4, kP), Rational(0));
  EXPECT_EQ(d.evaluate(8, kP), -cv * cv);
}

TEST(SeriesMul, TruncationBound) {
  const QSeries x(1, 9);
  const QSeries y(0, 4);
  EXPECT_EQ(series_mul(x, y).max_grade(), 5);
  EXPECT_EQ(series_mul(x, y).base(), 1);
  EXPECT_THROW(QSeries(0, 8).add(6, FactoredTerm()), InvariantViolation);
}

TEST(SeriesMul, AssociativeAndCommutative) {
  const QSeries x = series_Z_P2(1, 2);
  const QSeries y = series_Z_X0(FrameData(1, 0), h(0), 8);
  const QSeries z = series_prefactor(1, +1, 2);
  const QSeries l = series_mul(series_mul(x, y), z);
  const QSeries r = series_mul(x, series_mul(y, z));
  const QSeries c = series_mul(y, x);
  const QSeries xy = series_mul(x, y);
  std::vector<LinearForm> poles = l.pole_forms();
  for (const auto& p : points(1, 3, poles)) {
    for (long g = 0; g <= 8; g += 4) {
      EXPECT_EQ(l.evaluate(g, p), r.evaluate(g, p));
      EXPECT_EQ(xy.evaluate(g, p), c.evaluate(g, p));
    }
  }
}

TEST(SeriesGrades, SupportsAgreeModFour) {
  for (const auto& [f, k] : {std::pair{FrameData(1, 1), h(1)}, std::pair{FrameData(0, 1), h(-1)},
                             std::pair{FrameData(0, 2), h(0)}, std::pair{FrameData(2, 0), h(2)}}) {
    const long max4n = f.w1() + 8;
    const QSeries z0 = series_Z_X0(f, k, max4n);
    const QSeries z1 = series_Z_X1(f, k, max4n);
    EXPECT_EQ(z0.base() % 4, f.w1() % 4);
    EXPECT_EQ(z1.base() % 4, f.w1() % 4);
    for (const auto& [g, c] : z0.coefficients()) EXPECT_EQ(g % 4, f.w1() % 4);
    for (const auto& [g, c] : z1.coefficients()) EXPECT_EQ(g % 4, f.w1() % 4);
  }
}

TEST(Factorized, Examples) {
  const FrameData f(1, 0);
  EXPECT_EQ(series_Z_X1_factorized(f, h(0), 8).evaluate(0, kP), Rational(1));
  EXPECT_EQ(series_Z_X1_factorized(f, h(2), 4).evaluate(4, kP), mass_product(half_sum()));
  const QSeries p0 = series_Z_P2(1, 1, {SubstitutionRule::chart0({h(0)})});
  const QSeries p1 = series_Z_P2(1, 1, {SubstitutionRule::chart1({h(0)})});
  EXPECT_EQ(series_Z_X1_factorized(f, h(0), 4).evaluate(4, kP), p0.evaluate(4, kP) + p1.evaluate(4, kP));
}

TEST(Factorized, LowestOrderAgreement) {
  for (const auto& [f, k] : {std::pair{FrameData(1, 0), h(2)}, std::pair{FrameData(0, 1), h(1)},
                             std::pair{FrameData(1, 1), h(3)}, std::pair{FrameData(2, 0), h(0)},
                             std::pair{FrameData(0, 2), h(2)}}) {
    const long max4n = f.w1() + 8;
    const QSeries direct = series_Z_X1(f, k, max4n);
    const QSeries fact = series_Z_X1_factorized(f, k, max4n);
    long lowest = -1;
    for (const auto& [g, c] : direct.coefficients()) {
      if (!c.empty()) {
        lowest = g;
        break;
      }
    }
    ASSERT_GE(lowest, 0);
    auto poles = direct.pole_forms();
    for (const auto& form : fact.pole_forms()) poles.push_back(form);
    for (const auto& p : points(f.rank(), 3, poles)) {
      EXPECT_NE(direct.evaluate(lowest, p), Rational(0));
      EXPECT_EQ(direct.evaluate(lowest, p), fact.evaluate(lowest, p));
    }
  }
}

TEST(MapToImo, Examples) {
  const FrameData f(1, 0);
  const EvalPoint a = map_to_imo(point(1, {1, 2, 0, 5, 0}), f);
  EXPECT_EQ(a.at(VarIndex::eps1()), Rational(-1));
  EXPECT_EQ(a.at(VarIndex::eps2()), Rational(-2));
  EXPECT_EQ(a.at(VarIndex::m(0)), Rational(7, 2));
  const EvalPoint b = map_to_imo(point(1, {0, 0, 1, 4, 9}), f);
  EXPECT_EQ(b.at(VarIndex::m(0)), Rational(4));
  EXPECT_EQ(b.at(VarIndex::m(1)), Rational(-9));
  const EvalPoint c = map_to_imo(point(1, {1, 1, 0, 0, 0}), f);
  EXPECT_EQ(c.at(VarIndex::m(1)), Rational(1));
  EXPECT_EQ(imo_charge(h(1)), h(-1));
}

TEST(Substitution, ComposeAndPullBack) {
  const SubstitutionRule s = SubstitutionRule::chart0({h(2)});
  const SubstitutionRule n = SubstitutionRule::negate_eps();
  const LinearForm f = Rational(3) * e1() - e2() + a(0) + m(1);
  EXPECT_EQ(s.then(n).apply(f), n.apply(s.apply(f)));
  EXPECT_EQ(s.apply(f).evaluate(kP), f.evaluate(s.pull_back(kP, 1)));
  EXPECT_TRUE(SubstitutionRule::identity().is_identity());
  SubstitutionRule bad;
  EXPECT_THROW(bad.set(VarIndex::eps1(), LinearForm::constant(Rational(1))), InvariantViolation);
}

}  // namespace
}  // namespace nekrasov
