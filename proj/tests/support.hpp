#pragma once

#include <initializer_list>
#include <vector>

#include "nekrasov/linear_form.hpp"
#include "nekrasov/young_diagram.hpp"

namespace nekrasov::testing {

inline LinearForm e1() { return LinearForm::variable(VarIndex::eps1()); }
inline LinearForm e2() { return LinearForm::variable(VarIndex::eps2()); }
inline LinearForm a(int alpha) { return LinearForm::variable(VarIndex::a(alpha)); }
inline LinearForm m(int f) { return LinearForm::variable(VarIndex::m(f)); }

inline YoungDiagram Y(std::initializer_list<int> cols) { return YoungDiagram(std::vector<int>(cols)); }

// Point with the given values for eps1, eps2, a.., m.. in order.
inline EvalPoint point(int rank, std::initializer_list<Rational> values) {
  EvalPoint p;
  auto it = values.begin();
  for (const auto& v : all_variables(rank)) {
    if (it == values.end()) break;
    p.set(v, *it++);
  }
  return p;
}

}  // namespace nekrasov::testing
