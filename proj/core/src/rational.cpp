#include "nekrasov/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "nekrasov/errors.hpp"

namespace nekrasov {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw PoleError("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_int(text)));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PoleError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(int exponent) const {
  if (exponent == 0) return Rational(1);
  const bool invert = exponent < 0;
  const unsigned long e = invert ? static_cast<unsigned long>(-static_cast<long>(exponent))
                                 : static_cast<unsigned long>(exponent);
  if (invert && is_zero()) throw PoleError("zero raised to a negative power");
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  mpq_class out = invert ? mpq_class(den, num) : mpq_class(num, den);
  return Rational(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace nekrasov
