#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/rational.hpp"

namespace nekrasov {

/// One equivariant variable: eps1, eps2, a_alpha (alpha < r) or m_f (f < 2r).
/// Indices are 0-based; names print 1-based ("a1", "m2").
struct VarIndex {
  enum class Kind : std::uint8_t { Eps1, Eps2, A, M };

  Kind kind = Kind::Eps1;
  int index = 0;

  static constexpr VarIndex eps1() { return {Kind::Eps1, 0}; }
  static constexpr VarIndex eps2() { return {Kind::Eps2, 0}; }
  static constexpr VarIndex a(int alpha) { return {Kind::A, alpha}; }
  static constexpr VarIndex m(int flavour) { return {Kind::M, flavour}; }

  std::string name() const;

  friend constexpr auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

/// All 2 + 3r variables for rank r, in canonical order eps1, eps2, a..., m....
std::vector<VarIndex> all_variables(int rank);

/// Assignment of rational values to variables.
class EvalPoint {
 public:
  void set(VarIndex v, Rational value) { values_[v] = std::move(value); }
  /// Throws std::out_of_range naming the missing variable.
  const Rational& at(VarIndex v) const;
  bool contains(VarIndex v) const { return values_.contains(v); }
  const std::map<VarIndex, Rational>& values() const { return values_; }

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;

 private:
  std::map<VarIndex, Rational> values_;
};

/// Affine-linear form c + sum_v coeff_v * v with a sparse, zero-free
/// coefficient list sorted by variable.
class LinearForm {
 public:
  LinearForm() = default;

  static LinearForm variable(VarIndex v, Rational coeff = Rational(1));
  static LinearForm constant(Rational c);

  const Rational& constant_term() const { return constant_; }
  const std::vector<std::pair<VarIndex, Rational>>& coefficients() const { return coeffs_; }
  Rational coefficient(VarIndex v) const;

  bool is_zero() const { return constant_.is_zero() && coeffs_.empty(); }

  LinearForm& add(VarIndex v, const Rational& coeff);
  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& s);

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
  friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
  friend LinearForm operator-(LinearForm a) { return a *= Rational(-1); }

  Rational evaluate(const EvalPoint& p) const;

  /// Human-readable, e.g. "2*eps1 - eps2 + a1".
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b);

 private:
  Rational constant_;
  std::vector<std::pair<VarIndex, Rational>> coeffs_;
};

}  // namespace nekrasov
