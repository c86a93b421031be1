#pragma once

#include "gcmforge/exact.hpp"
#include "gcmforge/gcm.hpp"

#include <string>
#include <vector>

namespace gcmforge {

/// Positive integer diagonal D (gcd 1) with DA symmetric.
struct SymmetrizerDiagonal {
  std::vector<BigInt> d;

  std::string to_string() const;  // "diag(1,2,2,1)"
  friend bool operator==(const SymmetrizerDiagonal&, const SymmetrizerDiagonal&) = default;
};

/// Ratio propagation along a spanning forest of the nonzero-entry graph,
/// then a consistency check on every remaining edge. Equivalent to equality
/// of opposite cycle products.
bool is_symmetrizable(const Gcm& a);

/// Throws NotSymmetrizable or Decomposable.
SymmetrizerDiagonal symmetrizer(const Gcm& a);

/// Same, propagating from `root` (0-based); the normalized result does not
/// depend on the root.
SymmetrizerDiagonal symmetrizer_from(const Gcm& a, int root);

/// d_i a_ij = d_j a_ji for every i, j.
bool symmetrizes(const Gcm& a, const std::vector<Rational>& d);
bool symmetrizes(const Gcm& a, const SymmetrizerDiagonal& d);

/// Entry rules of the symmetrizable construction, given DA symmetric:
///   - every nonzero a_ij is an integer multiple of d_j / d_i;
///   - when gcd(d_i, d_j) = 1 and not both are 1, a_ij is a multiple of d_j
///     and a_ji a multiple of d_i (or both vanish).
bool check_entry_rules(const Gcm& a, const SymmetrizerDiagonal& d);

}  // namespace gcmforge
