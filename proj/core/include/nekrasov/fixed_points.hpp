#pragma once

#include <string>
#include <vector>

#include "nekrasov/half_int.hpp"
#include "nekrasov/young_diagram.hpp"

namespace nekrasov {

/// Framing (w0, w1): r0 = w0 slots of colour 0 followed by r1 = w1 slots of
/// colour 1.
class FrameData {
 public:
  /// Throws std::invalid_argument unless w0, w1 >= 0 and w0 + w1 >= 1.
  FrameData(int w0, int w1);

  int w0() const { return w0_; }
  int w1() const { return w1_; }
  int rank() const { return w0_ + w1_; }
  int r0() const { return w0_; }
  int r1() const { return w1_; }
  /// Colour l_alpha of the 0-based slot alpha.
  int color(int alpha) const { return alpha < w0_ ? 0 : 1; }

  /// True iff 2k + w1 is even.
  bool admits(HalfInt k) const { return (k.doubled() + w1_) % 2 == 0; }
  /// Throws ParityError unless admits(k).
  void require_admissible(HalfInt k) const;

  friend bool operator==(const FrameData&, const FrameData&) = default;

 private:
  int w0_;
  int w1_;
};

struct FixedPointX0 {
  std::vector<YoungDiagram> diagrams;
  int v0 = 0;
  int v1 = 0;
};

struct FixedPointX1 {
  std::vector<HalfInt> kvec;
  std::vector<YoungDiagram> y1;
  std::vector<YoungDiagram> y2;

  /// 4 sum k_alpha^2 + 4 sum (|Y1_alpha| + |Y2_alpha|).
  long grade4n() const;
};

/// All colour-respecting diagram tuples with colour counts (v0, v1).
std::vector<FixedPointX0> enum_fixed_points_X0(const FrameData& frame, int v0, int v1);

/// All k-vectors with integral entries on colour-0 slots, half-odd entries on
/// colour-1 slots, sum k and 4 sum k_alpha^2 <= max4n, lexicographic on
/// doubled entries. Throws ParityError.
std::vector<std::vector<HalfInt>> enum_kvectors(const FrameData& frame, HalfInt k, long max4n);

/// Fixed points of the resolved side at exactly the given grade 4n.
/// Throws ParityError or GradeError.
std::vector<FixedPointX1> enum_fixed_points_X1(const FrameData& frame, HalfInt k, long grade4n);

std::string kvec_to_string(const std::vector<HalfInt>& kvec);

}  // namespace nekrasov
