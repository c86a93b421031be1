#pragma once

#include "gcmforge/gcm.hpp"

#include <compare>
#include <string>
#include <vector>

namespace gcmforge {

/// Identifies the class of a matrix under simultaneous row/column
/// permutation: the row-major serialization of its canonical form.
struct CanonicalKey {
  std::string bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
  Gcm matrix;
  CanonicalKey key;
  std::vector<int> perm;  // matrix(i,j) = original(perm[i], perm[j])
};

/// The representative minimizing the vertex-incremental code
///   column j = (a_1j, a_j1, a_2j, a_j2, ..., a_{j-1,j}, a_{j,j-1}),  j = 2..n
/// compared lexicographically with entries as integers. The leading
/// principal submatrices of a canonical matrix are themselves canonical, and
/// for an indecomposable matrix they are all connected.
CanonicalForm canonical_form(const Gcm& a);

/// Row-major key of a matrix as given (no canonicalization). Entries are
/// encoded so that more negative values sort later.
CanonicalKey serialize_key(const SquareMatrix& a);

/// True iff no permutation gives a strictly smaller code.
bool is_canonical(const SquareMatrix& a);

}  // namespace gcmforge
