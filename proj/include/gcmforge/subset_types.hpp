#pragma once

#include "gcmforge/gcm.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace gcmforge {

/// N_k index of every principal subset of one matrix, keyed by bitmask.
///
/// Each byte packs the index k in its low seven bits (for a disconnected
/// subset: the maximum over its components) and, in the top bit, whether some
/// connected subset inside it is affine. A connected subset S is evaluated
/// from the entries of its maximal proper subsets:
///   - all of them finite: the sign of det S decides finite (k=0),
///     affine (k=1) or compact hyperbolic (k=2);
///   - otherwise S is indefinite and k = max(2, 1 + max proper k).
/// This is the principal-minor criterion evaluated bottom-up.
namespace subset_code {

inline constexpr std::uint8_t kAffineBit = 0x80;
inline constexpr std::uint8_t kMaxK = 0x7f;

inline int k_of(std::uint8_t code) { return code & kMaxK; }
inline bool has_affine(std::uint8_t code) { return (code & kAffineBit) != 0; }
inline std::uint8_t pack(int k, bool affine) {
  return std::uint8_t((k > kMaxK ? kMaxK : k) | (affine ? kAffineBit : 0));
}

/// Component of `mask` containing its lowest member.
inline std::uint32_t lowest_component(std::uint32_t mask, const std::uint32_t* adj) {
  std::uint32_t comp = mask & (~mask + 1);
  std::uint32_t frontier = comp;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint32_t fresh = adj[v] & mask & ~comp;
    comp |= fresh;
    frontier |= fresh;
  }
  return comp;
}

/// Sign of det of the principal submatrix on `mask`, assuming all its proper
/// principal minors are positive (so elimination needs no pivoting).
/// `entry(i, j)` reads the full matrix.
template <typename EntryFn>
int positive_minor_det_sign(std::uint32_t mask, EntryFn&& entry);

/// Evaluates one subset; all proper subsets of `mask` must already be in `table`.
template <typename EntryFn>
std::uint8_t evaluate(std::uint32_t mask, const std::uint32_t* adj, const std::uint8_t* table,
                      EntryFn&& entry) {
  const std::uint32_t comp = lowest_component(mask, adj);
  if (comp != mask) {
    const std::uint8_t a = table[comp];
    const std::uint8_t b = table[mask ^ comp];
    return pack(k_of(a) > k_of(b) ? k_of(a) : k_of(b), has_affine(a) || has_affine(b));
  }
  if ((mask & (mask - 1)) == 0) return pack(0, false);
  int max_k = 0;
  bool affine = false;
  for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
    const std::uint8_t c = table[mask & ~(rest & (~rest + 1))];
    if (k_of(c) > max_k) max_k = k_of(c);
    affine = affine || has_affine(c);
  }
  int k;
  if (max_k == 0) {
    const int sign = positive_minor_det_sign(mask, entry);
    k = sign > 0 ? 0 : (sign == 0 ? 1 : 2);
  } else {
    k = max_k + 1 > 2 ? max_k + 1 : 2;
  }
  return pack(k, affine || k == 1);
}

}  // namespace subset_code

/// Full table for one matrix (dimension at most kMaxDim).
class SubsetTypes {
 public:
  static constexpr int kMaxDim = 20;

  explicit SubsetTypes(const SquareMatrix& a);

  int dim() const noexcept { return dim_; }
  std::uint32_t full_mask() const noexcept { return (std::uint32_t{1} << dim_) - 1; }
  int k(std::uint32_t mask) const { return subset_code::k_of(table_[mask]); }
  bool has_affine(std::uint32_t mask) const { return subset_code::has_affine(table_[mask]); }
  bool connected(std::uint32_t mask) const {
    return mask != 0 && subset_code::lowest_component(mask, adj_.data()) == mask;
  }

 private:
  int dim_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint8_t> table_;
};

}  // namespace gcmforge

#include "gcmforge/detail/minor_det.hpp"
