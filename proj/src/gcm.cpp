#include "gcmforge/gcm.hpp"

#include "gcmforge/error.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace gcmforge {

namespace {

std::string cell(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<Entry>> rows)
    : SquareMatrix(int(rows.size())) {
  int i = 0;
  for (const auto& r : rows) {
    if (int(r.size()) != dim_)
      throw Error(Errc::NotSquare, "row " + std::to_string(i + 1) + " has " +
                                       std::to_string(r.size()) + " entries, expected " +
                                       std::to_string(dim_));
    int j = 0;
    for (Entry v : r) (*this)(i, j++) = v;
    ++i;
  }
}

SquareMatrix SquareMatrix::from_rows(const Rows& rows) {
  if (rows.empty()) throw Error(Errc::NotSquare, "empty matrix");
  SquareMatrix m(int(rows.size()));
  for (int i = 0; i < m.dim_; ++i) {
    if (int(rows[i].size()) != m.dim_)
      throw Error(Errc::NotSquare, "row " + std::to_string(i + 1) + " has " +
                                       std::to_string(rows[i].size()) +
                                       " entries, expected " + std::to_string(m.dim_));
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + std::size_t(i) * m.dim_);
  }
  return m;
}

Rows SquareMatrix::rows() const {
  Rows out(dim_);
  for (int i = 0; i < dim_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SquareMatrix SquareMatrix::permuted(std::span<const int> perm) const {
  SquareMatrix p(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) p(i, j) = (*this)(perm[i], perm[j]);
  return p;
}

IndexSubset IndexSubset::from_zero_based(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  if (members.empty()) throw Error(Errc::IndexOutOfRange, "empty index subset");
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw Error(Errc::IndexOutOfRange, "repeated index in subset");
  if (members.front() < 0)
    throw Error(Errc::IndexOutOfRange, "index " + std::to_string(members.front() + 1));
  IndexSubset s;
  s.members_ = std::move(members);
  return s;
}

IndexSubset IndexSubset::from_one_based(std::initializer_list<int> members) {
  std::vector<int> zero;
  for (int m : members) zero.push_back(m - 1);
  return from_zero_based(std::move(zero));
}

IndexSubset IndexSubset::from_mask(std::uint64_t mask) {
  std::vector<int> members;
  for (; mask; mask &= mask - 1) members.push_back(std::countr_zero(mask));
  return from_zero_based(std::move(members));
}

IndexSubset IndexSubset::all(int n) {
  std::vector<int> members(n);
  for (int i = 0; i < n; ++i) members[i] = i;
  return from_zero_based(std::move(members));
}

std::uint64_t IndexSubset::mask() const {
  std::uint64_t m = 0;
  for (int i : members_) m |= std::uint64_t{1} << i;
  return m;
}

std::string IndexSubset::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(members_[k] + 1);
  }
  return out + "}";
}

Gcm validate_gcm(const SquareMatrix& raw) {
  const int n = raw.dim();
  if (n == 0) throw Error(Errc::NotSquare, "empty matrix");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Entry v = raw(i, j);
      if (i == j) {
        if (v != 2)
          throw Error(Errc::DiagonalNotTwo, "a" + cell(i, j) + " = " + std::to_string(v));
        continue;
      }
      if (v > 0)
        throw Error(Errc::PositiveOffDiagonal, "a" + cell(i, j) + " = " + std::to_string(v));
      if ((v == 0) != (raw(j, i) == 0))
        throw Error(Errc::ZeroAsymmetry, cell(i, j) + ": a" + cell(i, j) + " = " +
                                             std::to_string(v) + " but a" + cell(j, i) +
                                             " = " + std::to_string(raw(j, i)));
    }
  }
  return Gcm(raw);
}

Gcm validate_gcm(const Rows& raw) { return validate_gcm(SquareMatrix::from_rows(raw)); }

Gcm principal_submatrix(const Gcm& a, const IndexSubset& s) {
  const auto members = s.members();
  if (members.empty()) throw Error(Errc::IndexOutOfRange, "empty index subset");
  if (members.back() >= a.dim())
    throw Error(Errc::IndexOutOfRange, "index " + std::to_string(members.back() + 1) +
                                           " exceeds dimension " + std::to_string(a.dim()));
  SquareMatrix sub(int(members.size()));
  for (int i = 0; i < sub.dim(); ++i)
    for (int j = 0; j < sub.dim(); ++j) sub(i, j) = a(members[i], members[j]);
  return Gcm(std::move(sub));
}

std::vector<std::uint64_t> adjacency_masks(const SquareMatrix& a) {
  std::vector<std::uint64_t> adj(a.dim(), 0);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j && a(i, j) != 0) adj[i] |= std::uint64_t{1} << j;
  return adj;
}

std::vector<IndexSubset> connected_components(const Gcm& a) {
  const auto adj = adjacency_masks(a.matrix());
  std::vector<IndexSubset> parts;
  std::vector<bool> seen(a.dim(), false);
  for (int start = 0; start < a.dim(); ++start) {
    if (seen[start]) continue;
    std::vector<int> members;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::uint64_t nb = adj[v]; nb; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    parts.push_back(IndexSubset::from_zero_based(std::move(members)));
  }
  return parts;
}

bool is_indecomposable(const Gcm& a) { return connected_components(a).size() == 1; }

std::string format_matrix(const SquareMatrix& a) {
  std::ostringstream out;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace gcmforge
