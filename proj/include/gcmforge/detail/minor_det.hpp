#pragma once

#include "gcmforge/exact.hpp"

#include <array>
#include <bit>
#include <cstdint>

namespace gcmforge::subset_code {

template <typename EntryFn>
int positive_minor_det_sign(std::uint32_t mask, EntryFn&& entry) {
  constexpr int kCap = 32;
  std::array<int, kCap> idx{};
  int n = 0;
  for (std::uint32_t m = mask; m; m &= m - 1) idx[n++] = std::countr_zero(m);

  // Leading pivots are proper principal minors, hence nonzero: plain Bareiss.
  constexpr std::int64_t kLimit = std::int64_t{1} << 61;
  std::array<std::int64_t, kCap * kCap> w{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i * kCap + j] = entry(idx[i], idx[j]);
  std::int64_t prev = 1;
  bool overflow = false;
  for (int k = 0; k + 1 < n && !overflow; ++k) {
    const std::int64_t piv = w[k * kCap + k];
    for (int i = k + 1; i < n && !overflow; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const __int128 v =
            (__int128)w[i * kCap + j] * piv - (__int128)w[i * kCap + k] * w[k * kCap + j];
        const __int128 q = v / prev;
        if (q >= kLimit || q <= -kLimit) {
          overflow = true;
          break;
        }
        w[i * kCap + j] = std::int64_t(q);
      }
    }
    prev = piv;
  }
  if (!overflow) {
    const std::int64_t d = w[(n - 1) * kCap + (n - 1)];
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
  }

  std::array<BigInt, kCap * kCap> b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i * kCap + j] = entry(idx[i], idx[j]);
  BigInt bprev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        b[i * kCap + j] =
            (b[i * kCap + j] * b[k * kCap + k] - b[i * kCap + k] * b[k * kCap + j]) / bprev;
    bprev = b[k * kCap + k];
  }
  const BigInt& d = b[(n - 1) * kCap + (n - 1)];
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

}  // namespace gcmforge::subset_code
