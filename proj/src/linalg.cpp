#include "gcmforge/linalg.hpp"

#include <cstdlib>
#include <utility>

namespace gcmforge {

namespace {

constexpr std::int64_t kFastLimit = std::int64_t{1} << 61;

bool fits_fast(__int128 v) { return v < kFastLimit && v > -kFastLimit; }

template <typename T>
struct Work {
  int n;
  std::vector<T> cells;
  T& at(int i, int j) { return cells[std::size_t(i) * n + j]; }
};

// Gauss-Jordan over the rationals; returns the pivot column of each pivot row.
std::vector<int> reduce_rational(std::vector<RationalVector>& rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < int(rows.size()); ++c) {
    int p = r;
    while (p < int(rows.size()) && rows[p][c] == 0) ++p;
    if (p == int(rows.size())) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (int i = 0; i < int(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (int j = c; j < int(rows[i].size()); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RationalVector> to_rational_rows(const SquareMatrix& a) {
  std::vector<RationalVector> rows(a.dim(), RationalVector(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) rows[i][j] = Rational(a(i, j));
  return rows;
}

}  // namespace

std::optional<std::int64_t> det_int64(const SquareMatrix& a) {
  const int n = a.dim();
  if (n == 0) return 1;
  Work<std::int64_t> m{n, std::vector<std::int64_t>(std::size_t(n) * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!fits_fast(a(i, j))) return std::nullopt;
      m.at(i, j) = a(i, j);
    }
  std::int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const __int128 v = (__int128)m.at(i, j) * m.at(k, k) - (__int128)m.at(i, k) * m.at(k, j);
        const __int128 q = v / prev;
        if (!fits_fast(q)) return std::nullopt;
        m.at(i, j) = std::int64_t(q);
      }
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

BigInt det_exact(const SquareMatrix& a) {
  if (auto fast = det_int64(a)) return BigInt(*fast);
  const int n = a.dim();
  Work<BigInt> m{n, std::vector<BigInt>(std::size_t(n) * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = a(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

int det_sign(const SquareMatrix& a) {
  const BigInt d = det_exact(a);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

int rank_exact(const SquareMatrix& a) {
  auto rows = to_rational_rows(a);
  return int(reduce_rational(rows, a.dim()).size());
}

std::optional<RationalVector> solve_exact(const SquareMatrix& a, const RationalVector& b) {
  const int n = a.dim();
  auto rows = to_rational_rows(a);
  for (int i = 0; i < n; ++i) rows[i].push_back(b[i]);
  const auto pivots = reduce_rational(rows, n);
  if (int(pivots.size()) < n) return std::nullopt;
  RationalVector x(n);
  for (int i = 0; i < n; ++i) x[i] = rows[i][n];
  return x;
}

std::vector<RationalVector> kernel_basis(const SquareMatrix& a) {
  const int n = a.dim();
  auto rows = to_rational_rows(a);
  const auto pivots = reduce_rational(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector multiply(const SquareMatrix& a, const RationalVector& x) {
  RationalVector y(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a(i, j) != 0) y[i] += a(i, j) * x[j];
  return y;
}

}  // namespace gcmforge
