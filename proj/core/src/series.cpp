#include "nekrasov/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nekrasov/errors.hpp"
#include "nekrasov/localization.hpp"
#include "nekrasov/parallel.hpp"

namespace nekrasov {

namespace {

long mod4(long g) { return ((g % 4) + 4) % 4; }

template <class FixedPoint, class TermFn>
Coefficient sum_terms(const std::vector<FixedPoint>& fps, const SeriesOptions& opts,
                      TermFn&& term) {
  auto terms = parallel_map(fps.size(), opts.threads,
                            [&](std::size_t i) { return opts.subst.apply(term(fps[i])); });
  return Coefficient(std::move(terms));
}

}  // namespace

std::vector<long> QSeries::grades() const {
  std::vector<long> out;
  for (long g = base_; g <= max_grade_; g += 4) out.push_back(g);
  return out;
}

bool QSeries::in_support(long grade) const {
  return grade >= base_ && grade <= max_grade_ && mod4(grade - base_) == 0;
}

const Coefficient& QSeries::coefficient(long grade) const {
  static const Coefficient kZero;
  auto it = coeffs_.find(grade);
  return it == coeffs_.end() ? kZero : it->second;
}

void QSeries::add(long grade, const Coefficient& c) {
  if (!in_support(grade)) {
    throw InvariantViolation("grade " + std::to_string(grade) + " outside series support [" +
                             std::to_string(base_) + ", " + std::to_string(max_grade_) + "]");
  }
  coeffs_[grade].append(c);
}

void QSeries::add(long grade, const FactoredTerm& t) { add(grade, Coefficient(t)); }

std::vector<LinearForm> QSeries::pole_forms() const {
  std::vector<LinearForm> out;
  for (const auto& [g, c] : coeffs_) {
    for (const auto& t : c.terms()) {
      for (auto& f : t.denominator_forms()) out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QSeries series_Z_X0(const FrameData& frame, HalfInt k, long max4n, const SeriesOptions& opts) {
  frame.require_admissible(k);
  if (max4n < frame.w1()) throw std::invalid_argument("max4n must be at least w1");
  QSeries out(frame.w1(), max4n);
  for (long v0 = 0; 4 * v0 + frame.w1() <= max4n; ++v0) {
    const long twice_v1 = 2 * v0 + frame.w1() + k.doubled();
    if (twice_v1 < 0) continue;
    const auto fps = enum_fixed_points_X0(frame, static_cast<int>(v0), static_cast<int>(twice_v1 / 2));
    if (fps.empty()) continue;
    out.add(4 * v0 + frame.w1(),
            sum_terms(fps, opts, [&](const FixedPointX0& fp) { return term_X0(frame, fp); }));
  }
  return out;
}

QSeries series_Z_X1(const FrameData& frame, HalfInt k, long max4n, const SeriesOptions& opts) {
  frame.require_admissible(k);
  if (max4n < frame.w1()) throw std::invalid_argument("max4n must be at least w1");
  QSeries out(frame.w1(), max4n);
  for (long g = frame.w1(); g <= max4n; g += 4) {
    const auto fps = enum_fixed_points_X1(frame, k, g);
    if (fps.empty()) continue;
    out.add(g, sum_terms(fps, opts, [&](const FixedPointX1& fp) { return term_X1(frame, fp); }));
  }
  return out;
}

QSeries series_Z_P2(int rank, long max_n, const SeriesOptions& opts) {
  QSeries out(0, 4 * max_n);
  for (long n = 0; n <= max_n; ++n) {
    const auto tuples = diagram_tuples(rank, static_cast<int>(n));
    out.add(4 * n, sum_terms(tuples, opts, [](const std::vector<YoungDiagram>& ys) {
              return term_P2(ys);
            }));
  }
  return out;
}

FactoredTerm u_ratio(int rank) {
  LinearForm eps_sum = LinearForm::variable(VarIndex::eps1()) + LinearForm::variable(VarIndex::eps2());
  LinearForm charge;
  for (int alpha = 0; alpha < rank; ++alpha) charge.add(VarIndex::a(alpha), Rational(2));
  for (int f = 0; f < 2 * rank; ++f) charge.add(VarIndex::m(f), Rational(1));
  return FactoredTerm(Rational(1, 2), {{std::move(eps_sum), 1},
                                       {std::move(charge), 1},
                                       {LinearForm::variable(VarIndex::eps1()), -1},
                                       {LinearForm::variable(VarIndex::eps2()), -1}});
}

namespace {

// prod_{i<j} (x + step*i) / j!, coefficients of x^0..x^j.
std::vector<Rational> factorial_polynomial(int j, long step) {
  std::vector<Rational> poly{Rational(1)};
  for (int i = 0; i < j; ++i) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    const Rational root(step * i);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] += poly[d] * root;
    }
    poly = std::move(next);
  }
  Rational fact(1);
  for (int i = 2; i <= j; ++i) fact *= Rational(i);
  for (auto& c : poly) c /= fact;
  return poly;
}

Coefficient polynomial_in(const FactoredTerm& u, const std::vector<Rational>& poly,
                          const Rational& scale) {
  Coefficient out;
  for (std::size_t d = 0; d < poly.size(); ++d) {
    if (poly[d].is_zero()) continue;
    out.add(FactoredTerm(poly[d] * scale) * u.pow(static_cast<int>(d)));
  }
  return out;
}

}  // namespace

std::vector<Rational> binomial_polynomial(int j) { return factorial_polynomial(j, -1); }
std::vector<Rational> rising_polynomial(int j) { return factorial_polynomial(j, 1); }

QSeries series_prefactor(int rank, int sign, long max_n) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("prefactor sign must be +1 or -1");
  const FactoredTerm u = u_ratio(rank);
  // binom(sign*u, j) * (-(-1)^r)^j
  const Rational base_sign(rank % 2 == 0 ? -1 : 1);
  QSeries out(0, 4 * max_n);
  for (int j = 0; j <= max_n; ++j) {
    auto poly = binomial_polynomial(j);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      if (sign < 0 && d % 2 == 1) poly[d] = -poly[d];
    }
    out.add(4L * j, polynomial_in(u, poly, base_sign.pow(j)));
  }
  return out;
}

QSeries series_rising_prefactor(int rank, long max_n) {
  const FactoredTerm u = u_ratio(rank);
  QSeries out(0, 4 * max_n);
  for (int j = 0; j <= max_n; ++j) {
    const Rational sign((static_cast<long>(j) * rank) % 2 == 0 ? 1 : -1);
    out.add(4L * j, polynomial_in(u, rising_polynomial(j), sign));
  }
  return out;
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  QSeries out(a.base() + b.base(), std::min(a.max_grade() + b.base(), b.max_grade() + a.base()));
  for (const auto& [ga, ca] : a.coefficients()) {
    for (const auto& [gb, cb] : b.coefficients()) {
      if (ga + gb > out.max_grade()) continue;
      out.add(ga + gb, ca * cb);
    }
  }
  return out;
}

QSeries series_Z_X1_factorized(const FrameData& frame, HalfInt k, long max4n, int threads) {
  frame.require_admissible(k);
  if (max4n < frame.w1()) throw std::invalid_argument("max4n must be at least w1");
  const int r = frame.rank();
  QSeries out(frame.w1(), max4n);
  for (const auto& kvec : enum_kvectors(frame, k, max4n)) {
    long shift = 0;
    for (HalfInt x : kvec) shift += x.doubled() * x.doubled();
    const long max_n = (max4n - shift) / 4;
    const QSeries chart0 = series_Z_P2(r, max_n, {SubstitutionRule::chart0(kvec), threads});
    const QSeries chart1 = series_Z_P2(r, max_n, {SubstitutionRule::chart1(kvec), threads});
    const FactoredTerm ell = ell_factor(frame, kvec);
    const QSeries product = series_mul(chart0, chart1);
    for (const auto& [g, c] : product.coefficients()) {
      Coefficient scaled = c;
      scaled *= ell;
      out.add(g + shift, scaled);
    }
  }
  return out;
}

EvalPoint map_to_imo(const EvalPoint& p, const FrameData& frame) {
  const int r = frame.rank();
  const Rational half_sum = (p.at(VarIndex::eps1()) + p.at(VarIndex::eps2())) * Rational(1, 2);
  EvalPoint out;
  out.set(VarIndex::eps1(), -p.at(VarIndex::eps1()));
  out.set(VarIndex::eps2(), -p.at(VarIndex::eps2()));
  for (int alpha = 0; alpha < r; ++alpha) {
    if (p.contains(VarIndex::a(alpha))) out.set(VarIndex::a(alpha), p.at(VarIndex::a(alpha)));
  }
  for (int i = 0; i < r; ++i) {
    if (p.contains(VarIndex::m(i))) out.set(VarIndex::m(i), p.at(VarIndex::m(i)) - half_sum);
    if (p.contains(VarIndex::m(r + i))) {
      out.set(VarIndex::m(r + i), -p.at(VarIndex::m(r + i)) + half_sum);
    }
  }
  return out;
}

}  // namespace nekrasov
