#include "nekrasov/substitution.hpp"

#include "nekrasov/errors.hpp"

namespace nekrasov {

namespace {

LinearForm var(VarIndex v, long c = 1) { return LinearForm::variable(v, Rational(c)); }

}  // namespace

SubstitutionRule SubstitutionRule::negate_eps() {
  SubstitutionRule s;
  s.set(VarIndex::eps1(), var(VarIndex::eps1(), -1));
  s.set(VarIndex::eps2(), var(VarIndex::eps2(), -1));
  return s;
}

SubstitutionRule SubstitutionRule::negate_a_m(int rank) {
  SubstitutionRule s;
  for (int alpha = 0; alpha < rank; ++alpha) s.set(VarIndex::a(alpha), var(VarIndex::a(alpha), -1));
  for (int f = 0; f < 2 * rank; ++f) s.set(VarIndex::m(f), var(VarIndex::m(f), -1));
  return s;
}

SubstitutionRule SubstitutionRule::negate_all(int rank) {
  SubstitutionRule s = negate_a_m(rank);
  s.set(VarIndex::eps1(), var(VarIndex::eps1(), -1));
  s.set(VarIndex::eps2(), var(VarIndex::eps2(), -1));
  return s;
}

SubstitutionRule SubstitutionRule::chart0(const std::vector<HalfInt>& kvec) {
  SubstitutionRule s;
  s.set(VarIndex::eps1(), var(VarIndex::eps1(), 2));
  s.set(VarIndex::eps2(), var(VarIndex::eps2()) - var(VarIndex::eps1()));
  for (int alpha = 0; alpha < static_cast<int>(kvec.size()); ++alpha) {
    // 2 k_alpha = doubled.
    s.set(VarIndex::a(alpha),
          var(VarIndex::a(alpha)) + var(VarIndex::eps1(), static_cast<long>(kvec[alpha].doubled())));
  }
  return s;
}

SubstitutionRule SubstitutionRule::chart1(const std::vector<HalfInt>& kvec) {
  SubstitutionRule s;
  s.set(VarIndex::eps1(), var(VarIndex::eps1()) - var(VarIndex::eps2()));
  s.set(VarIndex::eps2(), var(VarIndex::eps2(), 2));
  for (int alpha = 0; alpha < static_cast<int>(kvec.size()); ++alpha) {
    s.set(VarIndex::a(alpha),
          var(VarIndex::a(alpha)) + var(VarIndex::eps2(), static_cast<long>(kvec[alpha].doubled())));
  }
  return s;
}

void SubstitutionRule::set(VarIndex v, LinearForm image) {
  if (!image.constant_term().is_zero()) {
    throw InvariantViolation("substitution image with a constant part for " + v.name());
  }
  if (image == LinearForm::variable(v)) {
    images_.erase(v);
  } else {
    images_[v] = std::move(image);
  }
}

LinearForm SubstitutionRule::image(VarIndex v) const {
  auto it = images_.find(v);
  return it == images_.end() ? LinearForm::variable(v) : it->second;
}

LinearForm SubstitutionRule::apply(const LinearForm& f) const {
  if (images_.empty()) return f;
  LinearForm out = LinearForm::constant(f.constant_term());
  for (const auto& [v, c] : f.coefficients()) {
    auto it = images_.find(v);
    if (it == images_.end()) {
      out.add(v, c);
    } else {
      out += it->second * c;
    }
  }
  return out;
}

FactoredTerm SubstitutionRule::apply(const FactoredTerm& t) const {
  if (images_.empty()) return t;
  std::vector<Factor> fs;
  fs.reserve(t.factors().size());
  for (const auto& f : t.factors()) fs.push_back({apply(f.form), f.exponent});
  return FactoredTerm(t.scalar(), std::move(fs));
}

Coefficient SubstitutionRule::apply(const Coefficient& c) const {
  if (images_.empty()) return c;
  Coefficient out;
  for (const auto& t : c.terms()) out.add(apply(t));
  return out;
}

SubstitutionRule SubstitutionRule::then(const SubstitutionRule& next) const {
  SubstitutionRule out;
  for (const auto& [v, img] : images_) out.set(v, next.apply(img));
  for (const auto& [v, img] : next.images_) {
    if (!images_.contains(v)) out.set(v, img);
  }
  return out;
}

EvalPoint SubstitutionRule::pull_back(const EvalPoint& p, int rank) const {
  EvalPoint q;
  for (VarIndex v : all_variables(rank)) q.set(v, image(v).evaluate(p));
  return q;
}

}  // namespace nekrasov
