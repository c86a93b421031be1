#pragma once

#include "gcmforge/extend.hpp"
#include "gcmforge/subset_types.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace gcmforge::detail {

inline constexpr int kMaxWorkDim = 16;

/// Type constraints on the final matrix; used to cut branches early.
struct TargetBounds {
  int final_dim = 0;
  int target_k = 0;
  bool compact_only = false;
};

/// A connected subset S with k(S) >= 1 inside a connected matrix of dimension
/// N forces k >= k(S) + N - |S|: every vertex added to a non-finite connected
/// set makes it indefinite and raises k by at least one.
inline bool subset_admissible(int k, int size, const TargetBounds& b) {
  if (k == 0) return true;
  if (b.compact_only && k == 1) return false;
  return k + b.final_dim - size <= b.target_k;
}

/// Square working matrix with a fixed stride.
struct WorkMatrix {
  int dim = 0;
  std::array<std::int32_t, kMaxWorkDim * kMaxWorkDim> a{};

  std::int32_t operator()(int i, int j) const { return a[i * kMaxWorkDim + j]; }
  std::int32_t& operator()(int i, int j) { return a[i * kMaxWorkDim + j]; }

  static WorkMatrix from(const SquareMatrix& m) {
    WorkMatrix w;
    w.dim = m.dim();
    for (int i = 0; i < w.dim; ++i)
      for (int j = 0; j < w.dim; ++j) w(i, j) = std::int32_t(m(i, j));
    return w;
  }
  SquareMatrix to_square() const {
    SquareMatrix m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = (*this)(i, j);
    return m;
  }
};

/// Full subset table of a work matrix (dimension <= kMaxWorkDim).
inline std::vector<std::uint8_t> full_table(const WorkMatrix& w) {
  std::array<std::uint32_t, kMaxWorkDim> adj{};
  for (int i = 0; i < w.dim; ++i)
    for (int j = 0; j < w.dim; ++j)
      if (i != j && w(i, j) != 0) adj[i] |= std::uint32_t{1} << j;
  std::vector<std::uint8_t> table(std::size_t{1} << w.dim, 0);
  auto entry = [&w](int i, int j) { return std::int64_t(w(i, j)); };
  for (std::uint32_t s = 1; s < table.size(); ++s)
    table[s] = subset_code::evaluate(s, adj.data(), table.data(), entry);
  return table;
}

/// Attaches one new vertex (index m) to an m-dimensional base, one entry
/// pair at a time in position order 0..m-1. After each pair, all subsets
/// containing both that position and the new vertex are classified; a
/// branch is cut as soon as one of them violates `subset_admissible`.
/// Complete nonzero attachments are passed to the visitor together with the
/// full (m+1)-dimensional subset table.
class VertexAttacher {
 public:
  struct Attachment {
    const WorkMatrix& matrix;
    const std::vector<std::uint8_t>& table;
    std::span<const int> choice;  // option index per position
  };

  VertexAttacher(const WorkMatrix& base, std::span<const std::uint8_t> base_table,
                 TargetBounds bounds, std::span<const EntryPair> options)
      : bounds_(bounds), options_(options.begin(), options.end()) {
    m_ = base.dim;
    work_ = base;
    work_.dim = m_ + 1;
    for (int i = 0; i <= m_; ++i) {
      work_(i, m_) = 0;
      work_(m_, i) = 0;
    }
    work_(m_, m_) = 2;
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        if (i != j && base(i, j) != 0) adj_[i] |= std::uint32_t{1} << j;
    table_.assign(std::size_t{1} << (m_ + 1), 0);
    std::copy(base_table.begin(), base_table.end(), table_.begin());
    table_[std::size_t{1} << m_] = subset_code::pack(0, false);
    choice_.assign(m_, 0);
  }

  /// Positions in `prefix` are forced to the given option indices.
  /// Returns false when the visitor or `cancel` stopped the run.
  template <typename Visitor>
  bool run(Visitor&& visit, std::span<const int> prefix = {},
           const std::atomic<bool>* cancel = nullptr) {
    prefix_ = prefix;
    cancel_ = cancel;
    stopped_ = false;
    descend(0, 0, visit);
    return !stopped_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  template <typename Visitor>
  void descend(int pos, int nonzero, Visitor& visit) {
    if (stopped_) return;
    if (pos == m_) {
      if (nonzero == 0) return;
      if (!visit(Attachment{work_, table_, choice_})) stopped_ = true;
      return;
    }
    ++nodes_;
    if (cancel_ && (nodes_ & 0x3ff) == 0 && cancel_->load(std::memory_order_relaxed)) {
      stopped_ = true;
      return;
    }
    const int first = pos < int(prefix_.size()) ? prefix_[pos] : 0;
    const int last = pos < int(prefix_.size()) ? prefix_[pos] + 1 : int(options_.size());
    const std::uint32_t nv = std::uint32_t{1} << m_;
    const std::uint32_t pv = std::uint32_t{1} << pos;
    for (int o = first; o < last && !stopped_; ++o) {
      const EntryPair& pair = options_[o];
      choice_[pos] = o;
      work_(m_, pos) = std::int32_t(pair.p);
      work_(pos, m_) = std::int32_t(pair.q);
      if (!pair.is_zero()) {
        adj_[m_] |= pv;
        adj_[pos] |= nv;
      }
      bool ok = true;
      auto entry = [this](int i, int j) { return std::int64_t(work_(i, j)); };
      const std::uint32_t below = pv - 1;
      // Enumerate sub ⊆ {0..pos-1} in increasing order.
      for (std::uint32_t sub = 0;; sub = (sub - below) & below) {
        const std::uint32_t s = sub | pv | nv;
        const std::uint8_t code = subset_code::evaluate(s, adj_.data(), table_.data(), entry);
        table_[s] = code;
        if (subset_code::lowest_component(s, adj_.data()) == s &&
            !subset_admissible(subset_code::k_of(code), std::popcount(s), bounds_)) {
          ok = false;
          break;
        }
        if (sub == below) break;
      }
      if (ok) descend(pos + 1, nonzero + (pair.is_zero() ? 0 : 1), visit);
      adj_[m_] &= ~pv;
      adj_[pos] &= ~nv;
    }
    work_(m_, pos) = 0;
    work_(pos, m_) = 0;
  }

  TargetBounds bounds_;
  std::vector<EntryPair> options_;
  int m_ = 0;
  WorkMatrix work_;
  std::array<std::uint32_t, kMaxWorkDim> adj_{};
  std::vector<std::uint8_t> table_;
  std::vector<int> choice_;
  std::span<const int> prefix_;
  const std::atomic<bool>* cancel_ = nullptr;
  bool stopped_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace gcmforge::detail
