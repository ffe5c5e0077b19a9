#include "nekrasov/character.hpp"

#include <algorithm>

#include "nekrasov/errors.hpp"

namespace nekrasov {

int Monomial::e_exponent(int alpha) const {
  for (const auto& [a, n] : e_) {
    if (a == alpha) return n;
  }
  return 0;
}

Monomial Monomial::times_e(int alpha, int exponent) const {
  Monomial out = *this;
  if (exponent == 0) return out;
  auto it = std::lower_bound(out.e_.begin(), out.e_.end(), alpha,
                             [](const auto& entry, int key) { return entry.first < key; });
  if (it != out.e_.end() && it->first == alpha) {
    it->second += exponent;
    if (it->second == 0) out.e_.erase(it);
  } else {
    out.e_.insert(it, {alpha, exponent});
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.t1x2_ + b.t1x2_, a.t2x2_ + b.t2x2_);
  out.e_ = a.e_;
  for (const auto& [alpha, n] : b.e_) out = out.times_e(alpha, n);
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  auto exp_str = [](int doubled) {
    return doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
  };
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  if (t1x2_ != 0) append(t1x2_ == 2 ? "t1" : "t1^" + exp_str(t1x2_));
  if (t2x2_ != 0) append(t2x2_ == 2 ? "t2" : "t2^" + exp_str(t2x2_));
  for (const auto& [alpha, n] : e_) {
    const std::string base = "e" + std::to_string(alpha + 1);
    append(n == 1 ? base : base + "^" + std::to_string(n));
  }
  return out.empty() ? "1" : out;
}

Character::Character(std::initializer_list<Monomial> monos) {
  for (const auto& m : monos) add(m);
}

void Character::add(const Monomial& m, int multiplicity) {
  if (multiplicity <= 0) {
    throw InvariantViolation("characters are effective: multiplicities must be positive");
  }
  monos_[m] += multiplicity;
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [m, n] : o.monos_) add(m, n);
  return *this;
}

Character Character::shifted(const Monomial& m) const {
  Character out;
  for (const auto& [x, n] : monos_) out.add(x * m, n);
  return out;
}

int Character::rank() const {
  int total = 0;
  for (const auto& entry : monos_) total += entry.second;
  return total;
}

int Character::multiplicity(const Monomial& m) const {
  auto it = monos_.find(m);
  return it == monos_.end() ? 0 : it->second;
}

std::string Character::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [m, n] : monos_) {
    for (int i = 0; i < n; ++i) {
      if (!first) out += ", ";
      out += m.to_string();
      first = false;
    }
  }
  return out + "}";
}

int degree_mod2(const Monomial& m, const FrameData& frame) {
  if (m.t1x2() % 2 != 0 || m.t2x2() % 2 != 0) {
    throw HalfDegreeError("half-integral t-exponent in " + m.to_string());
  }
  int deg = m.t1x2() / 2 + m.t2x2() / 2;
  for (const auto& [alpha, n] : m.e_exponents()) {
    if (frame.color(alpha) == 1) deg += n;
  }
  return ((deg % 2) + 2) % 2;
}

Character char_Lk(HalfInt k) {
  Character out;
  const auto two_k = static_cast<int>(k.doubled());
  auto same_parity = [two_k](int s) { return ((s - two_k) % 2 + 2) % 2 == 0; };
  if (two_k > 1) {
    // k > 1/2: t1^(i+1) t2^(j+1), i + j <= 2k - 2.
    for (int s = 0; s <= two_k - 2; ++s) {
      if (!same_parity(s)) continue;
      for (int i = 0; i <= s; ++i) out.add(Monomial::t(i + 1, s - i + 1));
    }
  } else if (two_k < -1) {
    // k < -1/2: t1^-i t2^-j, i + j <= -2k - 2.
    for (int s = 0; s <= -two_k - 2; ++s) {
      if (!same_parity(s)) continue;
      for (int i = 0; i <= s; ++i) out.add(Monomial::t(-i, -(s - i)));
    }
  }
  return out;
}

Character char_V_X0(const FrameData& frame, const FixedPointX0& fp, int s) {
  Character out;
  for (int alpha = 0; alpha < static_cast<int>(fp.diagrams.size()); ++alpha) {
    for (auto [i, j] : fp.diagrams[alpha].boxes()) {
      const Monomial m = Monomial::t(1 - i, 1 - j).times_e(alpha, 1);
      if (degree_mod2(m, frame) == s) out.add(m);
    }
  }
  return out;
}

Character char_V_X1(const FrameData& frame, const FixedPointX1& fp, int s) {
  (void)frame;
  Character out;
  const HalfInt shift = HalfInt::from_doubled(s);
  for (int alpha = 0; alpha < static_cast<int>(fp.kvec.size()); ++alpha) {
    const HalfInt k = fp.kvec[alpha];
    // 2(k - i + 1 + s/2) as an integer: 2k + s - 2i + 2.
    const auto two_k_s = static_cast<int>(k.doubled() + shift.doubled());
    const Monomial e = Monomial::e(alpha);
    out += char_Lk(k + shift).shifted(e);
    for (auto [i, j] : fp.y1[alpha].boxes()) {
      // t1^(2(k-i+1+s/2)) (t2/t1)^(1-j)
      const int p = two_k_s - 2 * i + 2;
      out.add(Monomial::t(p - (1 - j), 1 - j) * e);
    }
    for (auto [i, j] : fp.y2[alpha].boxes()) {
      // (t1/t2)^(1-i) t2^(2(k-j+1+s/2))
      const int p = two_k_s - 2 * j + 2;
      out.add(Monomial::t(1 - i, p - (1 - i)) * e);
    }
  }
  return out;
}

Character char_V_P2(const std::vector<YoungDiagram>& ys) {
  Character out;
  for (int alpha = 0; alpha < static_cast<int>(ys.size()); ++alpha) {
    for (auto [i, j] : ys[alpha].boxes()) out.add(Monomial::t(1 - i, 1 - j).times_e(alpha, 1));
  }
  return out;
}

Character char_N(const YoungDiagram& ya, const YoungDiagram& yb, int alpha, int beta) {
  Character out;
  const Monomial e = Monomial::e_ratio(beta, alpha);
  for (auto [i, j] : ya.boxes()) {
    out.add(Monomial::t(-yb.relative_leg(i, j), ya.relative_arm(i, j) + 1) * e);
  }
  for (auto [i, j] : yb.boxes()) {
    out.add(Monomial::t(ya.relative_leg(i, j) + 1, -yb.relative_arm(i, j)) * e);
  }
  return out;
}

Character char_substitute(const Character& ch, const ExponentMap& map) {
  Character out;
  for (const auto& [m, n] : ch.monomials()) {
    auto [x, y] = map.apply(m.t1x2(), m.t2x2());
    const bool was_integral = m.t1x2() % 2 == 0 && m.t2x2() % 2 == 0;
    if (was_integral && (x % 2 != 0 || y % 2 != 0)) {
      throw NonIntegralExponent("substitution leaves a half-integral exponent on " +
                                m.to_string());
    }
    Monomial image(x, y);
    for (const auto& [alpha, e] : m.e_exponents()) image = image.times_e(alpha, e);
    out.add(image, n);
  }
  return out;
}

Character char_tangent_P2(const std::vector<YoungDiagram>& ys) {
  Character out;
  const int r = static_cast<int>(ys.size());
  for (int alpha = 0; alpha < r; ++alpha) {
    for (int beta = 0; beta < r; ++beta) out += char_N(ys[alpha], ys[beta], alpha, beta);
  }
  return out;
}

Character char_tangent_X0(const FrameData& frame, const FixedPointX0& fp) {
  Character out;
  const Character full = char_tangent_P2(fp.diagrams);
  for (const auto& [m, n] : full.monomials()) {
    if (degree_mod2(m, frame) == 0) out.add(m, n);
  }
  return out;
}

Character char_tangent_X1(const FrameData& frame, const FixedPointX1& fp) {
  (void)frame;
  Character out;
  const int r = static_cast<int>(fp.kvec.size());
  for (int alpha = 0; alpha < r; ++alpha) {
    for (int beta = 0; beta < r; ++beta) {
      const HalfInt dk = fp.kvec[beta] - fp.kvec[alpha];
      const auto two_dk = static_cast<int>(dk.doubled());
      out += char_Lk(dk).shifted(Monomial::e_ratio(beta, alpha));
      out += char_substitute(char_N(fp.y1[alpha], fp.y1[beta], alpha, beta), kChartP1)
                 .shifted(Monomial::t(two_dk, 0));
      out += char_substitute(char_N(fp.y2[alpha], fp.y2[beta], alpha, beta), kChartP2)
                 .shifted(Monomial::t(0, two_dk));
    }
  }
  return out;
}

}  // namespace nekrasov
