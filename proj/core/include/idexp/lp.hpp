#pragma once

#include <vector>

#include "idexp/field.hpp"

namespace idexp {

using QVec = std::vector<Rat>;

enum class Rel { LE, GE, EQ };

struct LinConstraint {
  QVec a;
  Rel rel;
  Rat b;
};

// Exact feasibility of { x >= 0 : a_i . x rel_i b_i } by a phase-1 simplex
// with Bland's rule. Sizes here are tiny (tens of rows), so the dense
// rational tableau is the simplest thing that is certifiably correct.
bool lp_feasible(int nvars, const std::vector<LinConstraint>& cons);

}  // namespace idexp
