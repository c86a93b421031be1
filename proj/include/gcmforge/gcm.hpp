#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gcmforge {

using Entry = std::int64_t;
using Rows = std::vector<std::vector<Entry>>;

/// Square integer matrix with no further structure. Used for minors and
/// transposes, which need not satisfy the GCM axioms.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int dim) : dim_(dim), data_(std::size_t(dim) * dim, 0) {}
  SquareMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

  /// Throws Error(NotSquare) for ragged or non-square input.
  static SquareMatrix from_rows(const Rows& rows);

  int dim() const noexcept { return dim_; }
  Entry operator()(int i, int j) const { return data_[std::size_t(i) * dim_ + j]; }
  Entry& operator()(int i, int j) { return data_[std::size_t(i) * dim_ + j]; }

  std::span<const Entry> row(int i) const {
    return {data_.data() + std::size_t(i) * dim_, std::size_t(dim_)};
  }
  Rows rows() const;
  SquareMatrix transposed() const;

  /// Simultaneous row/column permutation: result(i,j) = (*this)(perm[i], perm[j]).
  SquareMatrix permuted(std::span<const int> perm) const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<Entry> data_;
};

/// Nonempty set of distinct row/column indices, stored 0-based in ascending
/// order. Printed 1-based.
class IndexSubset {
 public:
  IndexSubset() = default;
  static IndexSubset from_zero_based(std::vector<int> members);
  static IndexSubset from_one_based(std::initializer_list<int> members);
  static IndexSubset from_mask(std::uint64_t mask);
  static IndexSubset all(int n);

  std::span<const int> members() const noexcept { return members_; }
  int size() const noexcept { return int(members_.size()); }
  std::uint64_t mask() const;
  std::string to_string() const;  // "{1,2,3}"

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

 private:
  std::vector<int> members_;
};

/// Generalized Cartan matrix: a_ii = 2, a_ij <= 0 off the diagonal and
/// a_ij = 0 exactly when a_ji = 0. Immutable once validated.
class Gcm {
 public:
  Gcm() : m_(SquareMatrix{{2}}) {}

  int dim() const noexcept { return m_.dim(); }
  Entry operator()(int i, int j) const { return m_(i, j); }
  const SquareMatrix& matrix() const noexcept { return m_; }
  Rows rows() const { return m_.rows(); }

  Gcm transposed() const { return Gcm(m_.transposed()); }
  Gcm permuted(std::span<const int> perm) const { return Gcm(m_.permuted(perm)); }

  friend bool operator==(const Gcm&, const Gcm&) = default;

 private:
  explicit Gcm(SquareMatrix m) : m_(std::move(m)) {}
  friend Gcm validate_gcm(const SquareMatrix&);
  friend Gcm principal_submatrix(const Gcm&, const IndexSubset&);

  SquareMatrix m_;
};

/// Checks the axioms cell by cell in row-major order and reports the first
/// violation (1-based) as DiagonalNotTwo, PositiveOffDiagonal or ZeroAsymmetry.
Gcm validate_gcm(const SquareMatrix& raw);
Gcm validate_gcm(const Rows& raw);

Gcm principal_submatrix(const Gcm& a, const IndexSubset& s);

/// Components of the graph with an edge {i,j} whenever a_ij != 0, ordered by
/// smallest member.
std::vector<IndexSubset> connected_components(const Gcm& a);
bool is_indecomposable(const Gcm& a);

/// Bitmask adjacency (bit j of adj[i] set iff a_ij != 0, i != j). Requires n <= 64.
std::vector<std::uint64_t> adjacency_masks(const SquareMatrix& a);

std::string format_matrix(const SquareMatrix& a);

}  // namespace gcmforge
