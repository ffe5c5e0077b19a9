#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/fixed_points.hpp"
#include "nekrasov/half_int.hpp"
#include "nekrasov/young_diagram.hpp"

namespace nekrasov {

/// Laurent monomial t1^(t1x2/2) t2^(t2x2/2) prod e_alpha^n_alpha. The
/// t-exponents are stored doubled; e-exponents are sparse, sorted by slot and
/// zero-free.
class Monomial {
 public:
  Monomial() = default;
  Monomial(int t1x2, int t2x2) : t1x2_(t1x2), t2x2_(t2x2) {}
  /// Integral t-exponents.
  static Monomial t(int t1_exp, int t2_exp) { return Monomial(2 * t1_exp, 2 * t2_exp); }
  static Monomial e(int alpha) { return Monomial().times_e(alpha, 1); }
  /// e_beta e_alpha^-1; the unit monomial when alpha == beta.
  static Monomial e_ratio(int beta, int alpha) {
    return Monomial().times_e(beta, 1).times_e(alpha, -1);
  }

  int t1x2() const { return t1x2_; }
  int t2x2() const { return t2x2_; }
  const std::vector<std::pair<int, int>>& e_exponents() const { return e_; }
  int e_exponent(int alpha) const;

  Monomial times_e(int alpha, int exponent) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  int t1x2_ = 0;
  int t2x2_ = 0;
  std::vector<std::pair<int, int>> e_;
};

/// Effective torus character: multiset of monomials.
class Character {
 public:
  Character() = default;
  Character(std::initializer_list<Monomial> monos);

  void add(const Monomial& m, int multiplicity = 1);
  Character& operator+=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  /// Multiplies every monomial by m.
  Character shifted(const Monomial& m) const;

  int rank() const;
  bool empty() const { return monos_.empty(); }
  int multiplicity(const Monomial& m) const;
  const std::map<Monomial, int>& monomials() const { return monos_; }

  std::string to_string() const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::map<Monomial, int> monos_;
};

/// Integer 2x2 matrix acting on the doubled t-exponent pair.
struct ExponentMap {
  std::array<int, 4> m{1, 0, 0, 1};  // row-major

  std::pair<int, int> apply(int t1x2, int t2x2) const {
    return {m[0] * t1x2 + m[1] * t2x2, m[2] * t1x2 + m[3] * t2x2};
  }
};

/// (t1, t2) -> (t1^2, t2/t1).
inline constexpr ExponentMap kChartP1{{2, -1, 0, 1}};
/// (t1, t2) -> (t1/t2, t2^2).
inline constexpr ExponentMap kChartP2{{1, 0, -1, 2}};

/// Z2-degree of a monomial: t-exponents plus e-exponents of colour-1 slots,
/// mod 2. Throws HalfDegreeError on half-integral t-exponents.
int degree_mod2(const Monomial& m, const FrameData& frame);

/// Character of H^1 of O(kC - l_inf) on the resolution.
Character char_Lk(HalfInt k);

Character char_V_X0(const FrameData& frame, const FixedPointX0& fp, int s);
Character char_V_X1(const FrameData& frame, const FixedPointX1& fp, int s);
Character char_V_P2(const std::vector<YoungDiagram>& ys);

/// N_{alpha,beta}: arm/leg character for a pair of diagrams.
Character char_N(const YoungDiagram& ya, const YoungDiagram& yb, int alpha, int beta);

/// Throws NonIntegralExponent if a result exponent is odd (half-integral
/// after undoubling) where the input was integral.
Character char_substitute(const Character& ch, const ExponentMap& map);

Character char_tangent_P2(const std::vector<YoungDiagram>& ys);
Character char_tangent_X0(const FrameData& frame, const FixedPointX0& fp);
Character char_tangent_X1(const FrameData& frame, const FixedPointX1& fp);

}  // namespace nekrasov
