#include <gtest/gtest.h>

#include "nekrasov/errors.hpp"
#include "nekrasov/localization.hpp"
#include "support.hpp"

namespace nekrasov {
namespace {

using namespace nekrasov::testing;

HalfInt h(long doubled) { return HalfInt::from_doubled(doubled); }

// eps1, eps2, a1, m1, m2
const EvalPoint kP = point(1, {Rational(3, 7), Rational(-5, 2), Rational(11, 3), Rational(2, 9), Rational(-13, 4)});

Rational E1() { return kP.at(VarIndex::eps1()); }
Rational E2() { return kP.at(VarIndex::eps2()); }
Rational A1() { return kP.at(VarIndex::a(0)); }
Rational M(int f) { return kP.at(VarIndex::m(f)); }
Rational half_sum() { return (E1() + E2()) / Rational(2); }

// prod_f (a1 + m_f + shift)
Rational mass_product(const Rational& shift) {
  return (A1() + M(0) + shift) * (A1() + M(1) + shift);
}

TEST(Euler, Examples) {
  const FactoredTerm t = euler(Character{Monomial::t(1, 1) * Monomial::e(0)});
  ASSERT_EQ(t.factors().size(), 1u);
  EXPECT_EQ(t.factors()[0].form, e1() + e2() + a(0));
  EXPECT_TRUE(euler(Character{}).is_unit());
  EXPECT_THROW(euler(Character{Monomial()}), VanishingWeight);
}

TEST(Euler, Additive) {
  const Character x{Monomial::t(1, 0), Monomial::t(2, -1) * Monomial::e(0)};
  const Character y{Monomial::t(0, 3), Monomial::e_ratio(1, 0)};
  EXPECT_EQ(euler(x + y), euler(x) * euler(y));
}

TEST(MatterEuler, Examples) {
  EXPECT_TRUE(matter_euler(Character{}, 1).is_unit());
  EXPECT_EQ(matter_euler(Character{Monomial::e(0)}, 1).evaluate(kP), mass_product(-half_sum()));
  EXPECT_EQ(matter_euler(Character{Monomial::t(1, 1) * Monomial::e(0)}, 1).evaluate(kP),
            mass_product(half_sum()));
}

TEST(TermP2, Examples) {
  EXPECT_TRUE(term_P2({YoungDiagram()}).is_unit());
  EXPECT_EQ(term_P2({Y({1})}).evaluate(kP), mass_product(-half_sum()) / (E1() * E2()));
  const Rational num = mass_product(-half_sum()) * mass_product(-half_sum() - E2());
  const Rational den = Rational(2) * E2() * E2() * (E1() - E2()) * E1();
  EXPECT_EQ(term_P2({Y({2})}).evaluate(kP), num / den);
}

TEST(TermP2, FiniteForSmallTuples) {
  for (int r = 1; r <= 2; ++r) {
    EvalPoint p = point(r, {Rational(3, 7), Rational(-5, 2), Rational(11, 3), Rational(-1, 5),
                            Rational(2, 9), Rational(-13, 4), Rational(7), Rational(1, 8)});
    for (int n = 0; n <= 3; ++n) {
      for (const auto& ys : diagram_tuples(r, n)) EXPECT_NO_THROW(term_P2(ys).evaluate(p));
    }
  }
}

FixedPointX0 x0(std::vector<YoungDiagram> ys) { return {std::move(ys), 0, 0}; }

TEST(TermX0, Examples) {
  const FrameData f(1, 0);
  EXPECT_EQ(term_X0(f, x0({Y({1})})).evaluate(kP), mass_product(-half_sum()));
  EXPECT_EQ(term_X0(f, x0({Y({2})})).evaluate(kP),
            mass_product(-half_sum()) / (Rational(2) * E2() * (E1() - E2())));
  EXPECT_EQ(term_X0(f, x0({Y({1, 1})})).evaluate(kP),
            mass_product(-half_sum()) / (Rational(2) * E1() * (E2() - E1())));
}

TEST(TermX0, PartialFractionSum) {
  const FrameData f(1, 0);
  Rational sum;
  for (const auto& fp : enum_fixed_points_X0(f, 1, 1)) sum += term_X0(f, fp).evaluate(kP);
  EXPECT_EQ(sum, mass_product(-half_sum()) / (Rational(2) * E1() * E2()));
}

FixedPointX1 x1(std::vector<HalfInt> k, std::vector<YoungDiagram> y1, std::vector<YoungDiagram> y2) {
  return {std::move(k), std::move(y1), std::move(y2)};
}

TEST(TermX1, Examples) {
  const FrameData f(1, 0);
  const YoungDiagram none;
  EXPECT_TRUE(term_X1(f, x1({h(0)}, {none}, {none})).is_unit());
  EXPECT_EQ(term_X1(f, x1({h(2)}, {none}, {none})).evaluate(kP), mass_product(half_sum()));
  // One box in the first chart: weights of V0 in (2 eps1, eps2 - eps1), tangent {t2/t1, t1^2}.
  const Rational chart_shift = -(Rational(2) * E1() + E2() - E1()) / Rational(2);
  EXPECT_EQ(term_X1(f, x1({h(0)}, {Y({1})}, {none})).evaluate(kP),
            mass_product(chart_shift) / ((E2() - E1()) * Rational(2) * E1()));
}

TEST(EllFactor, Examples) {
  EXPECT_TRUE(ell_factor(FrameData(1, 0), {h(0)}).is_unit());
  EXPECT_EQ(ell_factor(FrameData(1, 0), {h(2)}).evaluate(kP), mass_product(half_sum()));
  EXPECT_THROW(ell_factor(FrameData(1, 0), {h(1)}), ParityError);
}

TEST(EllFactor, ZeroVectorIsUnit) {
  for (int w0 = 1; w0 <= 4; ++w0) {
    EXPECT_TRUE(ell_factor(FrameData(w0, 0), std::vector<HalfInt>(w0, h(0))).is_unit());
  }
}

TEST(EllFactor, TwoSlotStructure) {
  const FrameData f(2, 0);
  const EvalPoint p = point(2, {Rational(3, 7), Rational(-5, 2), Rational(11, 3), Rational(-1, 5),
                                Rational(2, 9), Rational(-13, 4), Rational(7), Rational(1, 8)});
  Character v0 = char_Lk(h(2)).shifted(Monomial::e(0)) + char_Lk(h(-2)).shifted(Monomial::e(1));
  Character tangent = char_Lk(h(-4)).shifted(Monomial::e_ratio(1, 0)) +
                      char_Lk(h(4)).shifted(Monomial::e_ratio(0, 1));
  EXPECT_EQ(ell_factor(f, {h(2), h(-2)}).evaluate(p),
            matter_euler(v0, 2).evaluate(p) / euler(tangent).evaluate(p));
}

}  // namespace
}  // namespace nekrasov
