#include "nekrasov/walls.hpp"

#include <algorithm>
#include <cstdlib>

namespace nekrasov {

std::string Wall::to_string() const {
  std::string root = "(" + std::to_string(alpha0) + "," + std::to_string(alpha1) + ")";
  if (kind == Kind::Real) return "real alpha_" + std::to_string(label) + " = " + root;
  return "imaginary " + std::to_string(label) + "delta = " + root;
}

std::vector<Wall> enum_walls(int v0, int v1) {
  std::vector<Wall> real;
  // alpha_m = (m, m+1) and alpha_{-m-1} = (m+1, m) for m >= 0.
  for (int m = 0; m <= std::max(v0, v1); ++m) {
    if (m <= v0 && m + 1 <= v1) real.push_back({m, m + 1, Wall::Kind::Real, m});
    if (m + 1 <= v0 && m <= v1) real.push_back({m + 1, m, Wall::Kind::Real, -m - 1});
  }
  std::sort(real.begin(), real.end(), [](const Wall& a, const Wall& b) {
    if (a.alpha0 + a.alpha1 != b.alpha0 + b.alpha1) return a.alpha0 + a.alpha1 < b.alpha0 + b.alpha1;
    return a.alpha0 < b.alpha0;
  });
  for (int p = 1; p <= std::min(v0, v1); ++p) real.push_back({p, p, Wall::Kind::Imaginary, p});
  return real;
}

}  // namespace nekrasov
