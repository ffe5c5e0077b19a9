#include "nekrasov/localization.hpp"

#include <stdexcept>

#include "nekrasov/errors.hpp"

namespace nekrasov {

namespace {

const Rational kHalf(1, 2);

LinearForm half_sum_eps() {
  return LinearForm::variable(VarIndex::eps1(), kHalf) +
         LinearForm::variable(VarIndex::eps2(), kHalf);
}

}  // namespace

LinearForm weight_form(const Monomial& m) {
  LinearForm f;
  f.add(VarIndex::eps1(), Rational(m.t1x2(), 2));
  f.add(VarIndex::eps2(), Rational(m.t2x2(), 2));
  for (const auto& [alpha, n] : m.e_exponents()) f.add(VarIndex::a(alpha), Rational(n));
  return f;
}

FactoredTerm euler(const Character& ch) {
  std::vector<Factor> factors;
  factors.reserve(ch.monomials().size());
  for (const auto& [m, n] : ch.monomials()) {
    LinearForm w = weight_form(m);
    if (w.is_zero()) throw VanishingWeight("zero weight for monomial " + m.to_string());
    factors.push_back({std::move(w), n});
  }
  return FactoredTerm(Rational(1), std::move(factors));
}

FactoredTerm matter_euler(const Character& v0, int rank) {
  std::vector<Factor> factors;
  const LinearForm shift = half_sum_eps();
  for (int f = 0; f < 2 * rank; ++f) {
    for (const auto& [m, n] : v0.monomials()) {
      LinearForm w = weight_form(m) + LinearForm::variable(VarIndex::m(f)) - shift;
      if (!w.constant_term().is_zero()) throw InvariantViolation("weight with constant part");
      factors.push_back({std::move(w), n});
    }
  }
  return FactoredTerm(Rational(1), std::move(factors));
}

FactoredTerm term_P2(const std::vector<YoungDiagram>& ys) {
  const int r = static_cast<int>(ys.size());
  return matter_euler(char_V_P2(ys), r) * euler(char_tangent_P2(ys)).inverse();
}

FactoredTerm term_X0(const FrameData& frame, const FixedPointX0& fp) {
  return matter_euler(char_V_X0(frame, fp, 0), frame.rank()) *
         euler(char_tangent_X0(frame, fp)).inverse();
}

FactoredTerm term_X1(const FrameData& frame, const FixedPointX1& fp) {
  return matter_euler(char_V_X1(frame, fp, 0), frame.rank()) *
         euler(char_tangent_X1(frame, fp)).inverse();
}

FactoredTerm ell_factor(const FrameData& frame, const std::vector<HalfInt>& kvec) {
  const int r = frame.rank();
  if (static_cast<int>(kvec.size()) != r) throw std::invalid_argument("k-vector length != rank");
  Character numerator;
  Character denominator;
  for (int alpha = 0; alpha < r; ++alpha) {
    if (kvec[alpha].is_integer() != (frame.color(alpha) == 0)) {
      throw ParityError("k-vector entry " + kvec[alpha].to_string() + " has the wrong parity");
    }
    numerator += char_Lk(kvec[alpha]).shifted(Monomial::e(alpha));
    for (int beta = 0; beta < r; ++beta) {
      denominator += char_Lk(kvec[beta] - kvec[alpha]).shifted(Monomial::e_ratio(beta, alpha));
    }
  }
  return matter_euler(numerator, r) * euler(denominator).inverse();
}

}  // namespace nekrasov
