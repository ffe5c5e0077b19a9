#pragma once

#include <vector>

#include "nekrasov/character.hpp"
#include "nekrasov/factored_term.hpp"
#include "nekrasov/fixed_points.hpp"
#include "nekrasov/linear_form.hpp"

namespace nekrasov {

/// Equivariant first Chern class of a monomial:
/// (t1 exponent) eps1 + (t2 exponent) eps2 + sum_alpha n_alpha a_alpha.
LinearForm weight_form(const Monomial& m);

/// Product of weights over the character. Throws VanishingWeight on a zero
/// weight.
FactoredTerm euler(const Character& ch);

/// prod_{f < 2r} prod_{w in ch} (w + m_f - (eps1 + eps2)/2).
FactoredTerm matter_euler(const Character& v0, int rank);

/// Localisation contributions e(F_r(V_0)) / e(T) at one fixed point.
FactoredTerm term_P2(const std::vector<YoungDiagram>& ys);
FactoredTerm term_X0(const FrameData& frame, const FixedPointX0& fp);
FactoredTerm term_X1(const FrameData& frame, const FixedPointX1& fp);

/// The k-vector prefactor of the product formula on the resolution.
FactoredTerm ell_factor(const FrameData& frame, const std::vector<HalfInt>& kvec);

}  // namespace nekrasov
