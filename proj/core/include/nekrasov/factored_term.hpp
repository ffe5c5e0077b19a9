#pragma once

#include <span>
#include <string>
#include <vector>

#include "nekrasov/linear_form.hpp"
#include "nekrasov/rational.hpp"

namespace nekrasov {

struct Factor {
  LinearForm form;
  int exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// scalar * prod form_i^exponent_i, kept in canonical storage: factors sorted
/// by form, equal forms merged, zero exponents dropped, and a zero scalar
/// carries no factors.
class FactoredTerm {
 public:
  /// The unit term (scalar 1, no factors).
  FactoredTerm() = default;
  explicit FactoredTerm(Rational scalar) : scalar_(std::move(scalar)) { normalize(); }
  /// Throws VanishingWeight if a symbolically zero form has a negative
  /// exponent; a zero form with positive exponent zeroes the term.
  FactoredTerm(Rational scalar, std::vector<Factor> factors);

  static FactoredTerm unit() { return FactoredTerm(); }

  const Rational& scalar() const { return scalar_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_zero() const { return scalar_.is_zero(); }
  bool is_unit() const { return factors_.empty() && scalar_ == Rational(1); }

  FactoredTerm& operator*=(const FactoredTerm& o);
  friend FactoredTerm operator*(FactoredTerm a, const FactoredTerm& b) { return a *= b; }

  FactoredTerm pow(int exponent) const;
  FactoredTerm inverse() const;

  /// Exact evaluation; PoleError if a negative-exponent factor vanishes.
  Rational evaluate(const EvalPoint& p) const;

  /// Forms carrying a negative exponent.
  std::vector<LinearForm> denominator_forms() const;

  std::string to_string() const;

  friend bool operator==(const FactoredTerm&, const FactoredTerm&) = default;

 private:
  void normalize();

  Rational scalar_{1};
  std::vector<Factor> factors_;
};

/// Formal sum of factored terms; no cross-term cancellation is attempted.
class Coefficient {
 public:
  Coefficient() = default;
  explicit Coefficient(FactoredTerm t) { add(std::move(t)); }
  explicit Coefficient(std::vector<FactoredTerm> terms);

  /// Zero terms are dropped on insertion.
  void add(FactoredTerm t);
  void append(const Coefficient& o);

  const std::vector<FactoredTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Coefficient& operator*=(const FactoredTerm& t);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);

  Rational evaluate(const EvalPoint& p) const;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;

 private:
  std::vector<FactoredTerm> terms_;
};

}  // namespace nekrasov
