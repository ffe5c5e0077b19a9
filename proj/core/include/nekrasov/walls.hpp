#pragma once

#include <string>
#include <vector>

namespace nekrasov {

/// Positive root bounding a wall in the stability plane.
struct Wall {
  enum class Kind { Real, Imaginary };

  int alpha0 = 0;
  int alpha1 = 0;
  Kind kind = Kind::Real;
  /// m for the real root alpha_m = (|m|, |m+1|); p for p*delta = (p, p).
  int label = 0;

  std::string to_string() const;
  friend bool operator==(const Wall&, const Wall&) = default;
};

/// Positive roots with alpha0 <= v0 and alpha1 <= v1: real roots ordered by
/// alpha0 + alpha1 then alpha0, followed by imaginary roots by p.
std::vector<Wall> enum_walls(int v0, int v1);

}  // namespace nekrasov
