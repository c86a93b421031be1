#pragma once

#include <cstdint>
#include <vector>

namespace gcmforge::detail {

/// Shared search for the minimal vertex-incremental code. `M` provides
/// dim() and operator()(i, j).
template <typename M>
class CodeSearch {
 public:
  explicit CodeSearch(const M& a) : a_(a), n_(a.dim()) {
    twin_.assign(std::size_t(n_) * n_, false);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) twin_[u * n_ + v] = twin_[v * n_ + u] = twins(u, v);
    perm_.assign(n_, -1);
    used_.assign(n_, false);
  }

  /// Permutation realizing the minimal code.
  std::vector<int> minimal() {
    best_cols_.assign(n_, {});
    best_len_ = 0;
    search_min(0);
    return best_perm_;
  }

  /// True iff the identity ordering already has the minimal code.
  bool identity_is_minimal() { return !search_smaller(0); }

 private:
  using Column = std::vector<std::int64_t>;

  // Swapping u and v is an automorphism fixing every other vertex.
  bool twins(int u, int v) const {
    if (a_(u, v) != a_(v, u)) return false;
    for (int w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (a_(u, w) != a_(v, w) || a_(w, u) != a_(w, v)) return false;
    }
    return true;
  }

  // A remaining vertex whose smaller-index twin is also remaining yields the
  // same subtree; skip it.
  bool shadowed(int v) const {
    for (int u = 0; u < v; ++u)
      if (!used_[u] && twin_[u * n_ + v]) return true;
    return false;
  }

  void column(int p, int v, Column& out) const {
    out.resize(std::size_t(2) * p);
    for (int i = 0; i < p; ++i) {
      out[2 * i] = a_(perm_[i], v);
      out[2 * i + 1] = a_(v, perm_[i]);
    }
  }

  static int compare(const Column& x, const Column& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    return 0;
  }

  void search_min(int p) {
    if (p == n_) {
      best_perm_ = perm_;
      return;
    }
    Column col;
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || shadowed(v)) continue;
      column(p, v, col);
      if (p < best_len_) {
        const int c = compare(col, best_cols_[p]);
        if (c > 0) continue;
        if (c < 0) {
          best_cols_[p] = col;
          best_len_ = p + 1;
        }
      } else {
        best_cols_[p] = col;
        best_len_ = p + 1;
      }
      perm_[p] = v;
      used_[v] = true;
      search_min(p + 1);
      used_[v] = false;
    }
  }

  // Column p of the identity ordering.
  void identity_column(int p, Column& out) const {
    out.resize(std::size_t(2) * p);
    for (int i = 0; i < p; ++i) {
      out[2 * i] = a_(i, p);
      out[2 * i + 1] = a_(p, i);
    }
  }

  bool search_smaller(int p) {
    if (p == n_) return false;
    Column col, ref;
    identity_column(p, ref);
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || shadowed(v)) continue;
      column(p, v, col);
      const int c = compare(col, ref);
      if (c < 0) return true;
      if (c > 0) continue;
      perm_[p] = v;
      used_[v] = true;
      const bool found = search_smaller(p + 1);
      used_[v] = false;
      if (found) return true;
    }
    return false;
  }

  const M& a_;
  int n_;
  std::vector<bool> twin_;
  std::vector<int> perm_;
  std::vector<bool> used_;
  std::vector<Column> best_cols_;
  int best_len_ = 0;
  std::vector<int> best_perm_;
};

template <typename M>
std::vector<int> minimal_permutation(const M& a) {
  return CodeSearch<M>(a).minimal();
}

template <typename M>
bool is_minimal(const M& a) {
  return CodeSearch<M>(a).identity_is_minimal();
}

}  // namespace gcmforge::detail
