#include "nekrasov/linear_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace nekrasov {

std::string VarIndex::name() const {
  switch (kind) {
    case Kind::Eps1:
      return "eps1";
    case Kind::Eps2:
      return "eps2";
    case Kind::A:
      return "a" + std::to_string(index + 1);
    case Kind::M:
      return "m" + std::to_string(index + 1);
  }
  return "?";
}

std::vector<VarIndex> all_variables(int rank) {
  std::vector<VarIndex> vars{VarIndex::eps1(), VarIndex::eps2()};
  for (int alpha = 0; alpha < rank; ++alpha) vars.push_back(VarIndex::a(alpha));
  for (int f = 0; f < 2 * rank; ++f) vars.push_back(VarIndex::m(f));
  return vars;
}

const Rational& EvalPoint::at(VarIndex v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw std::out_of_range("evaluation point has no value for " + v.name());
  return it->second;
}

LinearForm LinearForm::variable(VarIndex v, Rational coeff) {
  LinearForm f;
  f.add(v, coeff);
  return f;
}

LinearForm LinearForm::constant(Rational c) {
  LinearForm f;
  f.constant_ = std::move(c);
  return f;
}

Rational LinearForm::coefficient(VarIndex v) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), v,
                             [](const auto& entry, VarIndex key) { return entry.first < key; });
  if (it != coeffs_.end() && it->first == v) return it->second;
  return Rational(0);
}

LinearForm& LinearForm::add(VarIndex v, const Rational& coeff) {
  if (coeff.is_zero()) return *this;
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), v,
                             [](const auto& entry, VarIndex key) { return entry.first < key; });
  if (it != coeffs_.end() && it->first == v) {
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  } else {
    coeffs_.insert(it, {v, coeff});
  }
  return *this;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (const auto& [v, c] : o.coeffs_) add(v, c);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  constant_ -= o.constant_;
  for (const auto& [v, c] : o.coeffs_) add(v, -c);
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& s) {
  if (s.is_zero()) {
    constant_ = Rational(0);
    coeffs_.clear();
    return *this;
  }
  constant_ *= s;
  for (auto& entry : coeffs_) entry.second *= s;
  return *this;
}

Rational LinearForm::evaluate(const EvalPoint& p) const {
  Rational out = constant_;
  for (const auto& [v, c] : coeffs_) out += c * p.at(v);
  return out;
}

std::string LinearForm::to_string() const {
  std::string out;
  auto emit = [&out](const Rational& c, const std::string& name) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (name.empty()) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += name;
    } else {
      out += mag.to_string() + "*" + name;
    }
  };
  for (const auto& [v, c] : coeffs_) emit(c, v.name());
  if (!constant_.is_zero()) emit(constant_, "");
  return out.empty() ? "0" : out;
}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
  if (auto c = a.constant_ <=> b.constant_; c != 0) return c;
  const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.coeffs_[i].first <=> b.coeffs_[i].first; c != 0) return c;
    if (auto c = a.coeffs_[i].second <=> b.coeffs_[i].second; c != 0) return c;
  }
  return a.coeffs_.size() <=> b.coeffs_.size();
}

}  // namespace nekrasov
