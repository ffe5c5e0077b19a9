#pragma once

#include <map>
#include <vector>

#include "nekrasov/factored_term.hpp"
#include "nekrasov/half_int.hpp"
#include "nekrasov/linear_form.hpp"

namespace nekrasov {

/// Linear change of variables v -> image(v); variables without an entry map
/// to themselves. Applying a rule to a form f produces f composed with the
/// rule.
class SubstitutionRule {
 public:
  SubstitutionRule() = default;

  static SubstitutionRule identity() { return {}; }
  /// eps -> -eps.
  static SubstitutionRule negate_eps();
  /// (eps, a, m) -> (-eps, -a, -m).
  static SubstitutionRule negate_all(int rank);
  /// (a, m) -> (-a, -m).
  static SubstitutionRule negate_a_m(int rank);
  /// First chart of the product formula: (eps1, eps2) -> (2 eps1, eps2 - eps1),
  /// a_alpha -> a_alpha + 2 eps1 k_alpha.
  static SubstitutionRule chart0(const std::vector<HalfInt>& kvec);
  /// Second chart: (eps1, eps2) -> (eps1 - eps2, 2 eps2),
  /// a_alpha -> a_alpha + 2 eps2 k_alpha.
  static SubstitutionRule chart1(const std::vector<HalfInt>& kvec);

  /// Throws InvariantViolation if the image has a constant part.
  void set(VarIndex v, LinearForm image);
  LinearForm image(VarIndex v) const;
  bool is_identity() const { return images_.empty(); }

  LinearForm apply(const LinearForm& f) const;
  FactoredTerm apply(const FactoredTerm& t) const;
  Coefficient apply(const Coefficient& c) const;

  /// Rule equivalent to applying *this and then `next`.
  SubstitutionRule then(const SubstitutionRule& next) const;

  /// Pulls a point back through the rule: the returned point q satisfies
  /// apply(f).evaluate(p) == f.evaluate(q).
  EvalPoint pull_back(const EvalPoint& p, int rank) const;

 private:
  std::map<VarIndex, LinearForm> images_;
};

}  // namespace nekrasov
