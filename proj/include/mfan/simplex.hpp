#pragma once

#include <vector>

#include "mfan/exactlin.hpp"

namespace mfan {

enum class Rel { Eq, Ge };

/// One row of a linear system over free (sign-unrestricted) variables:
/// coeffs . x  (= | >=)  rhs.
struct LinearConstraint {
  Vec coeffs;
  Rel rel = Rel::Ge;
  Rat rhs = 0;
};

/// Outcome of exact phase-1 feasibility.
///
/// When feasible, `point` satisfies every row exactly.  When infeasible,
/// `dual` is a Farkas witness: dual[i] >= 0 on Ge rows (free on Eq rows),
/// sum_i dual[i] * coeffs_i == 0 and sum_i dual[i] * rhs_i > 0, all exact.
struct Feasibility {
  bool feasible = false;
  Vec point;
  Vec dual;
};

/// Decides feasibility by the phase-1 simplex method in exact rational
/// arithmetic.  Bland's pivoting rule guarantees termination.
Feasibility find_feasible(const std::vector<LinearConstraint>& rows, std::size_t nvars);

}  // namespace mfan
