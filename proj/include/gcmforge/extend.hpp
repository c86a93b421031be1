#pragma once

#include "gcmforge/exact.hpp"
#include "gcmforge/gcm.hpp"
#include "gcmforge/symmetrize.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gcmforge {

/// New entries linking an added vertex to existing vertex j:
/// p = a_{new,j}, q = a_{j,new}.
struct EntryPair {
  Entry p = 0;
  Entry q = 0;

  bool is_zero() const noexcept { return p == 0; }
  std::string to_string() const;
  friend auto operator<=>(const EntryPair&, const EntryPair&) = default;
};

/// The nine pairs whose 2x2 block is finite or affine, in generation order:
/// (0,0), (-1,-1), (-1,-2), (-2,-1), (-1,-3), (-3,-1), (-1,-4), (-4,-1), (-2,-2).
const std::vector<EntryPair>& allowed_pairs();

/// Bordered matrix: `base` plus one vertex attached through `pairs`.
Gcm attach_vertex(const Gcm& base, std::span<const EntryPair> pairs);

struct ExtensionCandidate {
  Gcm base;
  std::vector<EntryPair> pairs;
  Gcm result;
};

/// Every assignment of allowed pairs to the n new positions except all-zero,
/// lexicographic in the pair vector (9^n - 1 candidates).
class RawExtensionStream {
 public:
  explicit RawExtensionStream(Gcm base);

  std::optional<ExtensionCandidate> next();
  static std::uint64_t count(int n);

 private:
  Gcm base_;
  std::vector<int> digits_;
  bool done_ = false;
};

/// Extensions of `a` (of type N_{k_target-1}) whose result has type
/// N_{k_target}, in raw-stream order. Branches that already contain a
/// subset incompatible with the target type are skipped without being
/// enumerated. `visit` returns false to stop early.
void for_each_extension_to_type(const Gcm& a, int k_target,
                                const std::function<bool(const ExtensionCandidate&)>& visit);

/// Collected form of the above; `limit` = 0 means no limit.
std::vector<Gcm> extend_to_type(const Gcm& a, int k_target, std::size_t limit = 0);

struct SymmetrizableExtension {
  Rational d_new;
  ExtensionCandidate candidate;
};

/// Candidate values for the new symmetrizer entry: d_i * r for r in
/// {1, 2, 3, 4, 1/2, 1/3, 1/4}, together with 1; ascending, deduplicated.
std::vector<Rational> candidate_d_new(const SymmetrizerDiagonal& d);

/// Per-position pair options compatible with d_i a_{i,new} = d_new a_{new,i},
/// restricted to pairs with p*q <= max_product.
std::vector<std::vector<EntryPair>> symmetric_pair_options(const SymmetrizerDiagonal& d,
                                                           const Rational& d_new,
                                                           int max_product = 4);

/// Extensions keeping (D, d_new) a symmetrizer, ordered by (d_new, pairs).
/// Throws NotSymmetrizable when D does not symmetrize A.
std::vector<SymmetrizableExtension> symmetrizable_extensions(const Gcm& a,
                                                             const SymmetrizerDiagonal& d,
                                                             int max_product = 4);
std::vector<SymmetrizableExtension> symmetrizable_extensions(const Gcm& a,
                                                             const SymmetrizerDiagonal& d,
                                                             const Rational& d_new,
                                                             int max_product = 4);

/// For a matrix of type N_{k,n}, k >= 2: every N_{k-1} connected principal
/// subset has dimension >= n-1, and (for k > 2) one of dimension n-1 exists.
bool verify_containment(const Gcm& big, int k);

}  // namespace gcmforge
