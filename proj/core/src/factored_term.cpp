#include "nekrasov/factored_term.hpp"

#include <algorithm>

#include "nekrasov/errors.hpp"

namespace nekrasov {

FactoredTerm::FactoredTerm(Rational scalar, std::vector<Factor> factors)
    : scalar_(std::move(scalar)), factors_(std::move(factors)) {
  normalize();
}

void FactoredTerm::normalize() {
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& x, const Factor& y) { return x.form < y.form; });
  for (auto& f : factors_) {
    if (f.exponent == 0) continue;
    if (!merged.empty() && merged.back().form == f.form) {
      merged.back().exponent += f.exponent;
    } else {
      merged.push_back(std::move(f));
    }
  }
  std::erase_if(merged, [](const Factor& f) { return f.exponent == 0; });
  for (const auto& f : merged) {
    if (!f.form.is_zero()) continue;
    if (f.exponent < 0) throw VanishingWeight("zero linear form in a denominator");
    scalar_ = Rational(0);
  }
  if (scalar_.is_zero()) merged.clear();
  factors_ = std::move(merged);
}

FactoredTerm& FactoredTerm::operator*=(const FactoredTerm& o) {
  scalar_ *= o.scalar_;
  factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
  normalize();
  return *this;
}

FactoredTerm FactoredTerm::pow(int exponent) const {
  if (exponent == 0) return FactoredTerm();
  if (exponent < 0 && is_zero()) throw VanishingWeight("inverse of the zero term");
  std::vector<Factor> fs = factors_;
  for (auto& f : fs) f.exponent *= exponent;
  return FactoredTerm(scalar_.pow(exponent), std::move(fs));
}

FactoredTerm FactoredTerm::inverse() const { return pow(-1); }

Rational FactoredTerm::evaluate(const EvalPoint& p) const {
  if (scalar_.is_zero()) return Rational(0);
  Rational num = scalar_;
  Rational den(1);
  for (const auto& f : factors_) {
    const Rational v = f.form.evaluate(p);
    if (f.exponent > 0) {
      if (v.is_zero()) return Rational(0);
      num *= v.pow(f.exponent);
    } else {
      if (v.is_zero()) throw PoleError("pole at " + f.form.to_string());
      den *= v.pow(-f.exponent);
    }
  }
  return num / den;
}

std::vector<LinearForm> FactoredTerm::denominator_forms() const {
  std::vector<LinearForm> out;
  for (const auto& f : factors_) {
    if (f.exponent < 0) out.push_back(f.form);
  }
  return out;
}

std::string FactoredTerm::to_string() const {
  std::string out = scalar_.to_string();
  for (const auto& f : factors_) {
    out += " * (" + f.form.to_string() + ")";
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

Coefficient::Coefficient(std::vector<FactoredTerm> terms) {
  terms_.reserve(terms.size());
  for (auto& t : terms) add(std::move(t));
}

void Coefficient::add(FactoredTerm t) {
  if (!t.is_zero()) terms_.push_back(std::move(t));
}

void Coefficient::append(const Coefficient& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
}

Coefficient& Coefficient::operator*=(const FactoredTerm& t) {
  if (t.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term *= t;
  std::erase_if(terms_, [](const FactoredTerm& x) { return x.is_zero(); });
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.add(x * y);
  }
  return out;
}

Rational Coefficient::evaluate(const EvalPoint& p) const {
  Rational sum(0);
  for (const auto& t : terms_) sum += t.evaluate(p);
  return sum;
}

}  // namespace nekrasov
