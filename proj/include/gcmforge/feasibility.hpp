#pragma once

#include "gcmforge/exact.hpp"

#include <cstddef>
#include <vector>

namespace gcmforge {

/// Homogeneous constraint  coeffs . x > 0  (strict) or  coeffs . x >= 0.
struct HomogeneousConstraint {
  std::vector<BigInt> coeffs;
  bool strict = true;
};

struct FeasibilityResult {
  enum class Status { Feasible, Infeasible, GaveUp };
  Status status = Status::GaveUp;
  RationalVector point;  // set when Feasible
};

/// Fourier-Motzkin elimination over exact integers with back-substitution.
/// Gives up (rather than exhausting memory) once the working system exceeds
/// `max_constraints` rows.
FeasibilityResult solve_homogeneous(const std::vector<HomogeneousConstraint>& system,
                                    int variables, std::size_t max_constraints = 200000);

}  // namespace gcmforge
