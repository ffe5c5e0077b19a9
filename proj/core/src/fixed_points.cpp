#include "nekrasov/fixed_points.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "nekrasov/errors.hpp"

namespace nekrasov {

FrameData::FrameData(int w0, int w1) : w0_(w0), w1_(w1) {
  if (w0 < 0 || w1 < 0 || w0 + w1 < 1) {
    throw std::invalid_argument("framing needs w0, w1 >= 0 and w0 + w1 >= 1");
  }
}

void FrameData::require_admissible(HalfInt k) const {
  if (!admits(k)) {
    throw ParityError("k = " + k.to_string() + " is incompatible with w1 = " +
                      std::to_string(w1_) + " (2k + w1 must be even)");
  }
}

long FixedPointX1::grade4n() const {
  long g = 0;
  for (HalfInt k : kvec) g += k.doubled() * k.doubled();
  for (const auto& y : y1) g += 4L * y.size();
  for (const auto& y : y2) g += 4L * y.size();
  return g;
}

std::vector<FixedPointX0> enum_fixed_points_X0(const FrameData& frame, int v0, int v1) {
  std::vector<FixedPointX0> out;
  if (v0 < 0 || v1 < 0) return out;
  for (auto& tuple : diagram_tuples(frame.rank(), v0 + v1)) {
    int c0 = 0;
    int c1 = 0;
    for (int alpha = 0; alpha < frame.rank(); ++alpha) {
      auto [e, o] = colored_sizes(tuple[alpha], frame.color(alpha));
      c0 += e;
      c1 += o;
    }
    if (c0 == v0 && c1 == v1) out.push_back({std::move(tuple), v0, v1});
  }
  return out;
}

std::vector<std::vector<HalfInt>> enum_kvectors(const FrameData& frame, HalfInt k, long max4n) {
  frame.require_admissible(k);
  std::vector<std::vector<HalfInt>> out;
  if (max4n < 0) return out;
  const int r = frame.rank();
  // |2 k_alpha| <= sqrt(max4n).
  const auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max4n))) + 1;

  std::vector<HalfInt> current;
  std::function<void(int, std::int64_t, long)> rec = [&](int slot, std::int64_t remaining_sum,
                                                         long budget) {
    if (slot == r) {
      if (remaining_sum == 0) out.push_back(current);
      return;
    }
    const std::int64_t parity = frame.color(slot);
    for (std::int64_t d = -bound; d <= bound; ++d) {
      if (((d % 2) + 2) % 2 != parity) continue;
      const long cost = d * d;
      if (cost > budget) continue;
      current.push_back(HalfInt::from_doubled(d));
      rec(slot + 1, remaining_sum - d, budget - cost);
      current.pop_back();
    }
  };
  rec(0, k.doubled(), max4n);
  return out;
}

std::vector<FixedPointX1> enum_fixed_points_X1(const FrameData& frame, HalfInt k, long grade4n) {
  frame.require_admissible(k);
  if (((grade4n - frame.w1()) % 4 + 4) % 4 != 0) {
    throw GradeError("grade " + std::to_string(grade4n) + " is not congruent to w1 = " +
                     std::to_string(frame.w1()) + " mod 4");
  }
  std::vector<FixedPointX1> out;
  const int r = frame.rank();
  for (auto& kvec : enum_kvectors(frame, k, grade4n)) {
    long kk = 0;
    for (HalfInt x : kvec) kk += x.doubled() * x.doubled();
    const long rest = grade4n - kk;
    if (rest % 4 != 0) continue;
    const int boxes = static_cast<int>(rest / 4);
    for (int s = 0; s <= boxes; ++s) {
      const auto firsts = diagram_tuples(r, s);
      const auto seconds = diagram_tuples(r, boxes - s);
      for (const auto& a : firsts) {
        for (const auto& b : seconds) out.push_back({kvec, a, b});
      }
    }
  }
  return out;
}

std::string kvec_to_string(const std::vector<HalfInt>& kvec) {
  std::string out = "(";
  for (std::size_t i = 0; i < kvec.size(); ++i) {
    if (i > 0) out += ",";
    out += kvec[i].to_string();
  }
  return out + ")";
}

}  // namespace nekrasov
