#pragma once

#include <map>
#include <vector>

#include "nekrasov/factored_term.hpp"
#include "nekrasov/fixed_points.hpp"
#include "nekrasov/half_int.hpp"
#include "nekrasov/substitution.hpp"

namespace nekrasov {

/// Truncated series in q^(1/4), keyed by the integer grade 4n. Every stored
/// grade g satisfies base <= g <= max_grade and g = base (mod 4); an absent
/// grade in that range has coefficient 0.
class QSeries {
 public:
  QSeries(long base, long max_grade) : base_(base), max_grade_(max_grade) {}

  long base() const { return base_; }
  long max_grade() const { return max_grade_; }
  /// Grades base, base + 4, ..., up to max_grade.
  std::vector<long> grades() const;

  const Coefficient& coefficient(long grade) const;
  /// Appends terms at `grade`; throws InvariantViolation for a grade outside
  /// the support.
  void add(long grade, const Coefficient& c);
  void add(long grade, const FactoredTerm& t);

  const std::map<long, Coefficient>& coefficients() const { return coeffs_; }

  bool in_support(long grade) const;

  /// Union of all denominator forms over every term.
  std::vector<LinearForm> pole_forms() const;

  Rational evaluate(long grade, const EvalPoint& p) const {
    return coefficient(grade).evaluate(p);
  }

 private:
  long base_;
  long max_grade_;
  std::map<long, Coefficient> coeffs_;
};

/// Options shared by the series builders.
struct SeriesOptions {
  SubstitutionRule subst;
  int threads = 1;
};

/// Quotient-stack side: grade 4 v0 + w1 carries the fixed-point sum with
/// v1 = v0 + w1/2 + k. Throws ParityError.
QSeries series_Z_X0(const FrameData& frame, HalfInt k, long max4n,
                    const SeriesOptions& opts = {});

/// Resolution side, summed directly over its fixed points.
QSeries series_Z_X1(const FrameData& frame, HalfInt k, long max4n,
                    const SeriesOptions& opts = {});

/// Plane series up to instanton number max_n; grade 4n.
QSeries series_Z_P2(int rank, long max_n, const SeriesOptions& opts = {});

/// u_r = (eps1 + eps2)(2 sum a + sum m) / (2 eps1 eps2).
FactoredTerm u_ratio(int rank);

/// Coefficients c_0..c_j of the falling-factorial binomial x(x-1)...(x-j+1)/j!
/// as a polynomial in x.
std::vector<Rational> binomial_polynomial(int j);
/// Coefficients of the rising factorial x(x+1)...(x+j-1)/j!.
std::vector<Rational> rising_polynomial(int j);

/// (1 - (-1)^r q)^(sign * u_r) up to q^max_n; grade 4j.
QSeries series_prefactor(int rank, int sign, long max_n);

/// sum_j (-1)^(jr) u_r(u_r+1)...(u_r+j-1)/j! q^j, the kernel of the
/// recursion between the two chambers.
QSeries series_rising_prefactor(int rank, long max_n);

/// Cauchy product. The result is valid up to
/// min(a.max + b.base, b.max + a.base).
QSeries series_mul(const QSeries& a, const QSeries& b);

/// Resolution side through the product formula: a sum over k-vectors of the
/// ell factor times two plane series in the chart variables.
QSeries series_Z_X1_factorized(const FrameData& frame, HalfInt k, long max4n, int threads = 1);

/// Conversion to the IMO variable conventions for these partition
/// functions: eps -> -eps, mu_i = m_i - (eps1+eps2)/2 and
/// mu_{r+i} = -m_{r+i} + (eps1+eps2)/2. The mu values are stored in the m
/// slots of the returned point.
EvalPoint map_to_imo(const EvalPoint& p, const FrameData& frame);
/// The IMO charge c = -k.
inline HalfInt imo_charge(HalfInt k) { return -k; }

}  // namespace nekrasov
