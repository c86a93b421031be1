#pragma once

#include "gcmforge/canonical.hpp"
#include "gcmforge/extend.hpp"
#include "gcmforge/gcm.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gcmforge {

struct SearchConfig {
  std::optional<int> entry_bound;    // max |a_ij|
  std::optional<int> product_bound;  // max a_ij * a_ji
  bool compact_only = false;
  double time_budget = 600.0;  // seconds
  std::optional<std::size_t> max_results;
  int threads = 0;  // 0: hardware concurrency; GCMFORGE_THREADS caps either way
};

/// Throws InfeasibleBounds on entry_bound < 1, product_bound < 1 or a
/// non-positive time budget.
void validate_config(const SearchConfig& config);

/// Worker count after applying GCMFORGE_THREADS.
int resolve_threads(const SearchConfig& config);

struct SearchReport {
  std::string query;  // "enumerate", "closure", "min-dim", "max-dim-n3", "upper-bound", ...
  int k = 0;
  int n = 0;  // 0 when the query spans several dimensions
  SearchConfig config;
  std::optional<int> effective_entry_bound;
  std::optional<int> effective_product_bound;
  std::vector<Gcm> representatives;  // canonical, ascending by key
  bool exhausted = true;
  bool truncated = false;  // max_results dropped some representatives
  double elapsed_seconds = 0.0;
  std::vector<std::string> findings;
  std::optional<bool> verdict;
  std::vector<SearchReport> steps;
};

/// JSON document; `timing` = false omits elapsed_seconds everywhere so that
/// reports of identical queries compare byte for byte.
std::string to_json(const SearchReport& report, bool timing = true);

/// Entry pairs admissible for a target N_{k,n} under `config`, (0,0) first.
/// For n >= k+1 every 2x2 block must be finite or affine, so the product
/// bound 4 is applied automatically. Throws InfeasibleBounds when the
/// search would be unbounded (n <= k without entry_bound) or when no
/// nonzero pair remains for n >= 2.
std::vector<EntryPair> pair_options(int k, int n, const SearchConfig& config);

/// All indecomposable N_{k,n} matrices within bounds, one canonical
/// representative per permutation class.
SearchReport enumerate_type(int k, int n, const SearchConfig& config);

/// Canonical classes of all one-vertex extensions of `seeds` that have
/// type N_k (and are compact when requested).
SearchReport extension_closure(const std::vector<Gcm>& seeds, int k, const SearchConfig& config);

SearchReport verify_min_dimension(int k, const SearchConfig& config);

/// Compact branch at n = 5, 6; closure of the three dimension-10 seeds;
/// reconstruction of the 10x10 example; then, budget permitting, direct
/// enumeration of all dimension-10 hyperbolic seeds and of N_{3,10},
/// N_{3,11}.
SearchReport verify_max_dimension_n3(const SearchConfig& config);

SearchReport verify_upper_bound(int k, const SearchConfig& config);

}  // namespace gcmforge
