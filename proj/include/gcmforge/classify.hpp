#pragma once

#include "gcmforge/exact.hpp"
#include "gcmforge/gcm.hpp"

#include <map>
#include <string>
#include <string_view>

namespace gcmforge {

enum class BaseType { Finite, Affine, Indefinite };

std::string_view to_string(BaseType t) noexcept;

enum class SignRelation { Positive, Zero, Negative };  // Au > 0, Au = 0, Au < 0

std::string_view to_string(SignRelation r) noexcept;

/// Certificate for a base type: u > 0 entrywise and Au has the stated sign.
struct Witness {
  RationalVector u;
  SignRelation relation;
};

/// Result of N_k typing. Invariants: k == 0 iff Finite, k == 1 iff Affine.
struct TypeLabel {
  int k = 0;
  int n = 1;
  bool compact = true;
  BaseType base = BaseType::Finite;

  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// "N_{k,n}" with the compactness flag, e.g. "N_{3,5} (non-compact)".
std::string to_string(const TypeLabel& label);

// All of these require an indecomposable matrix and throw Error(Decomposable)
// otherwise.
BaseType base_type(const Gcm& a);
Witness find_witness(const Gcm& a, BaseType t);
TypeLabel nk_type(const Gcm& a);
bool is_compact(const Gcm& a);

/// Dimension d -> max k over connected principal subsets of size d.
std::map<int, int> subtype_profile(const Gcm& a);

/// Exact re-check of a witness against A.
bool verify_witness(const Gcm& a, const Witness& w);

}  // namespace gcmforge
