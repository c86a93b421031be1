#pragma once

#include "gcmforge/exact.hpp"
#include "gcmforge/gcm.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gcmforge {

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Runs in 64-bit arithmetic while intermediates stay small and falls back to
/// arbitrary precision otherwise, so the result is exact for any input.
BigInt det_exact(const SquareMatrix& a);

/// Same elimination in 64/128-bit arithmetic only; nullopt on overflow.
std::optional<std::int64_t> det_int64(const SquareMatrix& a);

/// Sign of the determinant (-1, 0 or 1).
int det_sign(const SquareMatrix& a);

int rank_exact(const SquareMatrix& a);
inline int corank(const SquareMatrix& a) { return a.dim() - rank_exact(a); }

/// Unique solution of a x = b over the rationals, or nullopt when a is singular.
std::optional<RationalVector> solve_exact(const SquareMatrix& a, const RationalVector& b);

/// Basis of the rational null space of a (empty when a is invertible).
std::vector<RationalVector> kernel_basis(const SquareMatrix& a);

RationalVector multiply(const SquareMatrix& a, const RationalVector& x);

}  // namespace gcmforge
