#include "gcmforge/error.hpp"
#include "gcmforge/fixtures.hpp"
#include "gcmforge/symmetrize.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gcmforge;

namespace {

const Rows kH144 = {{2, -2, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -2, 2}};

SymmetrizerDiagonal diag(std::initializer_list<int> v) {
  SymmetrizerDiagonal d;
  for (int x : v) d.d.push_back(x);
  return d;
}

// Random GCM built from a hidden diagonal, so it is symmetrizable by
// construction: a_ij / a_ji = d_j / d_i.
oracle::Mat symmetrizable_gcm(std::mt19937_64& rng, int n) {
  static const int ds[] = {1, 2, 3, 4};
  std::vector<int> d(n);
  for (auto& x : d) x = ds[rng() % 4];
  oracle::Mat m = oracle::random_connected_gcm(rng, n, -1, 0.4);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (m[i][j] == 0) continue;
      // smallest a_ij, a_ji <= 4 in absolute value with d_i a_ij = d_j a_ji
      const int g = std::gcd(d[i], d[j]);
      const int aij = d[j] / g, aji = d[i] / g;
      if (aij > 4 || aji > 4) {
        m[i][j] = m[j][i] = 0;
      } else {
        m[i][j] = -aij;
        m[j][i] = -aji;
      }
    }
  return m;
}

}  // namespace

TEST_CASE("is_symmetrizable examples") {
  CHECK(is_symmetrizable(validate_gcm(kH144)));
  CHECK_FALSE(is_symmetrizable(validate_gcm(Rows{{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}})));
  CHECK(is_symmetrizable(validate_gcm(Rows{{2, -3, -1}, {-3, 2, 0}, {-1, 0, 2}})));
  CHECK(is_symmetrizable(validate_gcm(Rows{{2, 0}, {0, 2}})));
}

TEST_CASE("symmetrizer examples") {
  CHECK(symmetrizer(validate_gcm(kH144)) == diag({1, 2, 2, 1}));
  CHECK(symmetrizer(validate_gcm(kH144)).to_string() == "diag(1,2,2,1)");
  CHECK(symmetrizer(validate_gcm(Rows{{2, -1}, {-1, 2}})) == diag({1, 1}));
  CHECK(symmetrizer(validate_gcm(Rows{{2, -2}, {-1, 2}})) == diag({1, 2}));
  CHECK_THROWS_AS(symmetrizer(validate_gcm(Rows{{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}})), Error);
  try {
    symmetrizer(validate_gcm(Rows{{2, 0}, {0, 2}}));
    FAIL("expected Decomposable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Decomposable);
  }
}

TEST_CASE("check_entry_rules examples") {
  CHECK(check_entry_rules(validate_gcm(kH144), diag({1, 2, 2, 1})));
  CHECK(check_entry_rules(validate_gcm(Rows{{2, -1}, {-1, 2}}), diag({1, 1})));
  CHECK(check_entry_rules(validate_gcm(Rows{{2, -2}, {-1, 2}}), diag({1, 2})));
  // d = (1, 3): a_12 must be a multiple of 3.
  CHECK_FALSE(check_entry_rules(validate_gcm(Rows{{2, -1}, {-3, 2}}), diag({1, 3})));
  CHECK(check_entry_rules(validate_gcm(Rows{{2, -3}, {-1, 2}}), diag({1, 3})));
}

TEST_CASE("agreement with the cycle-product criterion") {
  std::mt19937_64 rng(41);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + int(rng() % 6);
    const auto m = trial % 2 ? oracle::random_connected_gcm(rng, n, -4, 0.35)
                             : symmetrizable_gcm(rng, n);
    const bool expected = oracle::cycle_symmetrizable(m);
    CHECK(is_symmetrizable(oracle::to_gcm(m)) == expected);
    (expected ? yes : no)++;
  }
  CHECK(yes > 50);
  CHECK(no > 50);
}

TEST_CASE("symmetrizer round trip, normalization and root independence") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + int(rng() % 6);
    const Gcm a = oracle::to_gcm(symmetrizable_gcm(rng, n));
    if (!is_indecomposable(a)) continue;
    const SymmetrizerDiagonal d = symmetrizer(a);
    CHECK(symmetrizes(a, d));
    BigInt g = 0;
    for (const auto& x : d.d) {
      CHECK(x > 0);
      g = boost::multiprecision::gcd(g, x);
    }
    CHECK(g == 1);
    CHECK(symmetrizer_from(a, int(rng() % n)) == d);
  }
}

TEST_CASE("symmetric matrices get the identity") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + int(rng() % 6);
    auto m = oracle::random_connected_gcm(rng, n, -4, 0.3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) m[i][j] = m[j][i];
    const Gcm a = oracle::to_gcm(m);
    CHECK(is_symmetrizable(a));
    const auto d = symmetrizer(a);
    for (const auto& x : d.d) CHECK(x == 1);
    CHECK(check_entry_rules(a, d));
  }
}

TEST_CASE("symmetrizable iff every principal submatrix is") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + int(rng() % 5);
    const auto m = trial % 2 ? oracle::random_connected_gcm(rng, n, -4, 0.35)
                             : symmetrizable_gcm(rng, n);
    const Gcm a = oracle::to_gcm(m);
    bool all_subs = true;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
      all_subs = all_subs && is_symmetrizable(principal_submatrix(a, IndexSubset::from_mask(s)));
    CHECK(is_symmetrizable(a) == all_subs);
  }
}
