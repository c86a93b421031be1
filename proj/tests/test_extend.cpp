#include "gcmforge/classify.hpp"
#include "gcmforge/error.hpp"
#include "gcmforge/extend.hpp"
#include "gcmforge/fixtures.hpp"
#include "gcmforge/search.hpp"
#include "gcmforge/symmetrize.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gcmforge;

namespace {

const Rows kH144 = {{2, -2, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -2, 2}};

SymmetrizerDiagonal diag(std::initializer_list<int> v) {
  SymmetrizerDiagonal d;
  for (int x : v) d.d.push_back(x);
  return d;
}

// Every candidate of the raw stream, filtered by full classification.
std::set<Rows> brute_extensions(const Gcm& a, int k_target) {
  std::set<Rows> out;
  RawExtensionStream stream(a);
  while (auto c = stream.next())
    if (nk_type(c->result).k == k_target) out.insert(c->result.rows());
  return out;
}

}  // namespace

TEST_CASE("allowed_pairs is the finite/affine 2x2 list") {
  std::set<EntryPair> brute;
  for (int p = 0; p >= -5; --p)
    for (int q = 0; q >= -5; --q)
      if ((p == 0) == (q == 0) && p * q <= 4) brute.insert({p, q});
  const auto& pairs = allowed_pairs();
  CHECK(pairs.size() == 9);
  CHECK(std::set<EntryPair>(pairs.begin(), pairs.end()) == brute);
  CHECK(std::count(pairs.begin(), pairs.end(), EntryPair{-1, -4}) == 1);
  CHECK(std::count(pairs.begin(), pairs.end(), EntryPair{-2, -3}) == 0);
}

TEST_CASE("raw stream: count, order, uniqueness and leading block") {
  for (const Rows& base : {Rows{{2}}, Rows{{2, -1}, {-1, 2}}, Rows{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}}) {
    const Gcm a = validate_gcm(base);
    RawExtensionStream stream(a);
    std::set<Rows> seen;
    std::vector<EntryPair> previous;
    std::uint64_t count = 0;
    while (auto c = stream.next()) {
      ++count;
      CHECK(seen.insert(c->result.rows()).second);
      CHECK(principal_submatrix(c->result, IndexSubset::all(a.dim())) == a);
      CHECK(std::any_of(c->pairs.begin(), c->pairs.end(),
                        [](const EntryPair& p) { return !p.is_zero(); }));
      CHECK(is_indecomposable(c->result));
      // Lexicographic in the allowed-pair order.
      std::vector<int> idx, prev_idx;
      for (const auto& p : c->pairs)
        idx.push_back(int(std::find(allowed_pairs().begin(), allowed_pairs().end(), p) -
                          allowed_pairs().begin()));
      for (const auto& p : previous)
        prev_idx.push_back(int(std::find(allowed_pairs().begin(), allowed_pairs().end(), p) -
                               allowed_pairs().begin()));
      if (!previous.empty()) CHECK(prev_idx < idx);
      previous = c->pairs;
    }
    CHECK(count == RawExtensionStream::count(a.dim()));
  }
  CHECK(RawExtensionStream::count(1) == 8);
  CHECK(RawExtensionStream::count(2) == 80);
}

TEST_CASE("extend_to_type matches brute-force filtering of the raw stream") {
  const Gcm h = validate_gcm(kH144);
  const auto fast = extend_to_type(h, 3);
  std::set<Rows> fast_set;
  for (const auto& g : fast) fast_set.insert(g.rows());
  CHECK(fast_set.size() == fast.size());
  CHECK(fast_set == brute_extensions(h, 3));
  CHECK(!fast.empty());
  CHECK(fast_set.count(fixture("A1_compact_5x5").matrix.rows()) == 1);
  for (const auto& g : fast) CHECK(principal_submatrix(g, IndexSubset::all(4)) == h);

  for (const char* name : {"H_1_2_3", "A2_example35"}) {
    const Gcm a = fixture(name).matrix;
    std::set<Rows> s;
    for (const auto& g : extend_to_type(a, 3)) s.insert(g.rows());
    CHECK(s == brute_extensions(a, 3));
  }
  CHECK_THROWS_AS(extend_to_type(validate_gcm(Rows{{2, -1}, {-1, 2}}), 3), Error);
}

TEST_CASE("extension order follows the raw stream") {
  const Gcm h = fixture("H_1_2_3").matrix;
  std::vector<Rows> expected;
  RawExtensionStream stream(h);
  while (auto c = stream.next())
    if (nk_type(c->result).k == 3) expected.push_back(c->result.rows());
  std::vector<Rows> got;
  for (const auto& g : extend_to_type(h, 3)) got.push_back(g.rows());
  CHECK(got == expected);
  CHECK(extend_to_type(h, 3, 5).size() == 5);
}

TEST_CASE("symmetrizable extensions of the worked example") {
  const Gcm a = validate_gcm(kH144);
  const SymmetrizerDiagonal d = diag({1, 2, 2, 1});

  for (const auto& e : symmetrizable_extensions(a, d, Rational(3))) {
    CHECK(e.candidate.pairs[1].is_zero());
    CHECK(e.candidate.pairs[2].is_zero());
  }
  const auto opts2 = symmetric_pair_options(d, Rational(2));
  CHECK(std::set<EntryPair>(opts2[0].begin(), opts2[0].end()) ==
        std::set<EntryPair>{{0, 0}, {-1, -2}});

  const auto all = symmetrizable_extensions(a, d);
  CHECK(!all.empty());
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].d_new <= all[i].d_new);
  for (const auto& e : all) {
    std::vector<Rational> extended(d.d.begin(), d.d.end());
    extended.push_back(e.d_new);
    CHECK(symmetrizes(e.candidate.result, extended));
    CHECK(is_symmetrizable(e.candidate.result));
    // The symmetrizer of the result restricted to the base is proportional to D.
    const auto dr = symmetrizer(e.candidate.result);
    for (int i = 0; i < 4; ++i) CHECK(dr.d[i] * d.d[0] == dr.d[0] * d.d[i]);
  }
  CHECK_THROWS_AS(symmetrizable_extensions(a, diag({1, 1, 1, 1})), Error);
}

TEST_CASE("symmetric base with unit diagonal allows symmetric pairs only") {
  const Gcm a = validate_gcm(Rows{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  const auto options = symmetric_pair_options(diag({1, 1, 1}), Rational(1));
  for (const auto& pos : options)
    CHECK(std::set<EntryPair>(pos.begin(), pos.end()) ==
          std::set<EntryPair>{{0, 0}, {-1, -1}, {-2, -2}});
  for (const auto& e : symmetrizable_extensions(a, diag({1, 1, 1}), Rational(1)))
    for (const auto& p : e.candidate.pairs) CHECK(p.p == p.q);
}

TEST_CASE("candidate d_new values") {
  const auto c = candidate_d_new(diag({1, 2, 2, 1}));
  CHECK(std::is_sorted(c.begin(), c.end()));
  CHECK(std::count(c.begin(), c.end(), Rational(6)) == 1);
  CHECK(std::count(c.begin(), c.end(), Rational(1, 4)) == 1);
  CHECK(std::count(c.begin(), c.end(), Rational(8)) == 1);
  CHECK(std::count(c.begin(), c.end(), Rational(5)) == 0);
}

TEST_CASE("verify_containment examples") {
  CHECK(verify_containment(fixture("final_10x10").matrix, 3));
  CHECK(verify_containment(fixture("A1_compact_5x5").matrix, 3));
  CHECK(verify_containment(validate_gcm(Rows{{2, -3}, {-2, 2}}), 2));
  CHECK_FALSE(verify_containment(fixture("final_10x10").matrix, 2));
}

TEST_CASE("one-vertex extension law on seeds of type N_{n-1,n}") {
  SearchConfig cfg;
  cfg.entry_bound = 4;
  for (int n : {3, 4}) {
    const auto seeds = enumerate_type(n - 1, n, cfg).representatives;
    REQUIRE(!seeds.empty());
    // All seeds at n = 3; an evenly spaced sample of about 40 at n = 4.
    const std::size_t step = n == 3 ? 1 : std::max<std::size_t>(1, seeds.size() / 40);
    for (std::size_t s = 0; s < seeds.size(); s += step) {
      const Gcm& seed = seeds[s];
      // Every allowed-pair extension has type n.
      RawExtensionStream stream(seed);
      while (auto c = stream.next()) CHECK(nk_type(c->result).k == n);
      if (n == 3) {
        // Any pair of product >= 5 pushes the type to n + 1.
        std::vector<EntryPair> pairs(n, EntryPair{0, 0});
        for (int pos = 0; pos < n; ++pos) {
          pairs.assign(n, EntryPair{0, 0});
          pairs[pos] = {-1, -5};
          CHECK(nk_type(attach_vertex(seed, pairs)).k == n + 1);
          pairs[pos] = {-3, -2};
          CHECK(nk_type(attach_vertex(seed, pairs)).k == n + 1);
        }
      }
    }
  }
}
