#include "gcmforge/search.hpp"

#include "gcmforge/detail/attacher.hpp"
#include "gcmforge/detail/canonical_impl.hpp"
#include "gcmforge/error.hpp"
#include "gcmforge/fixtures.hpp"
#include "gcmforge/subset_types.hpp"
#include "gcmforge/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace gcmforge {

namespace {

using Clock = std::chrono::steady_clock;
using detail::WorkMatrix;

struct WorkView {
  const WorkMatrix& w;
  int dim() const { return w.dim; }
  std::int64_t operator()(int i, int j) const { return w(i, j); }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Shared cancellation: set once the deadline passes.
class Deadline {
 public:
  explicit Deadline(double budget)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(budget))) {}

  const std::atomic<bool>& flag() const { return expired_; }
  bool expired() const { return expired_.load(std::memory_order_relaxed); }

  // Cheap enough to call per visited node; reads the clock every 256 calls.
  bool tick(std::uint32_t& counter) {
    if ((++counter & 0xff) == 0 && Clock::now() >= end_) expired_.store(true);
    return !expired();
  }

 private:
  Clock::time_point end_;
  std::atomic<bool> expired_{false};
};

/// Runs `task(i)` for i in [0, count) on up to `threads` workers.
template <typename Task>
void parallel_for(std::size_t count, int threads, Task&& task) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Gcm to_gcm(const WorkMatrix& w) { return validate_gcm(w.to_square()); }

void sort_and_store(std::vector<Gcm> reps, SearchReport& report) {
  std::vector<std::pair<CanonicalKey, Gcm>> keyed;
  keyed.reserve(reps.size());
  for (auto& g : reps) keyed.emplace_back(serialize_key(g.matrix()), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  if (report.config.max_results && keyed.size() > *report.config.max_results) {
    keyed.resize(*report.config.max_results);
    report.truncated = true;
  }
  report.representatives.clear();
  for (auto& [key, g] : keyed) report.representatives.push_back(std::move(g));
}

bool accept_full(const std::vector<std::uint8_t>& table, int dim, int k, bool compact_only) {
  const std::uint8_t code = table[(std::size_t{1} << dim) - 1];
  return subset_code::k_of(code) == k && !(compact_only && subset_code::has_affine(code));
}

struct Node {
  WorkMatrix matrix;
  std::vector<std::uint8_t> table;
};

/// Orderly generation: a vertex is attached to a canonical prefix and the
/// child is kept only if it is canonical itself.
class Enumerator {
 public:
  Enumerator(int k, int n, bool compact_only, std::vector<EntryPair> options, Deadline& deadline)
      : k_(k), n_(n), compact_(compact_only), options_(std::move(options)),
        bounds_{n, k, compact_only}, deadline_(deadline) {}

  /// Canonical children of `node` (which has dimension < n - 1).
  std::vector<Node> expand(const Node& node) {
    std::vector<Node> children;
    std::uint32_t ticks = 0;
    detail::VertexAttacher attacher(node.matrix, node.table, bounds_, options_);
    attacher.run(
        [&](const detail::VertexAttacher::Attachment& at) {
          if (!deadline_.tick(ticks)) return false;
          if (detail::is_minimal(WorkView{at.matrix})) children.push_back({at.matrix, at.table});
          return true;
        },
        {}, &deadline_.flag());
    return children;
  }

  void dfs(const Node& node, std::vector<WorkMatrix>& out) {
    std::uint32_t ticks = 0;
    detail::VertexAttacher attacher(node.matrix, node.table, bounds_, options_);
    attacher.run(
        [&](const detail::VertexAttacher::Attachment& at) {
          if (!deadline_.tick(ticks)) return false;
          if (at.matrix.dim == n_) {
            if (accept_full(at.table, n_, k_, compact_) && detail::is_minimal(WorkView{at.matrix}))
              out.push_back(at.matrix);
            return true;
          }
          if (!detail::is_minimal(WorkView{at.matrix})) return true;
          dfs(Node{at.matrix, at.table}, out);
          return !deadline_.expired();
        },
        {}, &deadline_.flag());
  }

 private:
  int k_;
  int n_;
  bool compact_;
  std::vector<EntryPair> options_;
  detail::TargetBounds bounds_;
  Deadline& deadline_;
};

SearchConfig with_remaining(const SearchConfig& config, Clock::time_point start) {
  SearchConfig c = config;
  c.time_budget = std::max(config.time_budget - seconds_since(start), 1e-3);
  return c;
}

bool out_of_time(const SearchConfig& config, Clock::time_point start) {
  return seconds_since(start) >= config.time_budget;
}

std::string count_phrase(std::size_t count) {
  return std::to_string(count) + (count == 1 ? " class" : " classes");
}

std::string exhaust_phrase(const SearchReport& r) {
  return r.exhausted ? "exhausted" : "NOT exhausted (budget)";
}

bool contains_class(const SearchReport& r, const Gcm& a) {
  const CanonicalKey key = canonical_form(a).key;
  for (const auto& g : r.representatives)
    if (serialize_key(g.matrix()) == key) return true;
  return false;
}

SearchReport skipped(std::string query, int k, int n, const SearchConfig& config,
                     std::string why) {
  SearchReport r;
  r.query = std::move(query);
  r.k = k;
  r.n = n;
  r.config = config;
  r.exhausted = false;
  r.findings.push_back("skipped: " + std::move(why));
  return r;
}

nlohmann::ordered_json report_json(const SearchReport& r, bool timing) {
  using nlohmann::ordered_json;
  auto opt = [](const auto& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  ordered_json j;
  j["query"] = {{"kind", r.query}, {"k", r.k}, {"n", r.n}};
  j["bounds"] = {{"entry_bound", opt(r.config.entry_bound)},
                 {"product_bound", opt(r.config.product_bound)},
                 {"effective_entry_bound", opt(r.effective_entry_bound)},
                 {"effective_product_bound", opt(r.effective_product_bound)},
                 {"compact_only", r.config.compact_only},
                 {"time_budget", r.config.time_budget},
                 {"max_results", opt(r.config.max_results)}};
  ordered_json reps = ordered_json::array();
  for (const auto& g : r.representatives) reps.push_back(g.rows());
  j["representatives"] = std::move(reps);
  j["count"] = r.representatives.size();
  j["exhausted"] = r.exhausted;
  j["truncated"] = r.truncated;
  if (timing) j["elapsed_seconds"] = r.elapsed_seconds;
  j["tool_version"] = kToolVersion;
  j["findings"] = r.findings;
  j["verdict"] = opt(r.verdict);
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.steps) steps.push_back(report_json(s, timing));
  j["steps"] = std::move(steps);
  return j;
}

}  // namespace

void validate_config(const SearchConfig& config) {
  if (config.entry_bound && *config.entry_bound < 1)
    throw Error(Errc::InfeasibleBounds, "entry_bound must be >= 1");
  if (config.product_bound && *config.product_bound < 1)
    throw Error(Errc::InfeasibleBounds,
                "product_bound < 1 admits no edge, so no connected matrix of dimension >= 2");
  if (!(config.time_budget > 0))
    throw Error(Errc::InfeasibleBounds, "time_budget must be positive");
}

int resolve_threads(const SearchConfig& config) {
  int threads = config.threads > 0 ? config.threads
                                   : int(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("GCMFORGE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) threads = std::min<long>(threads, cap);
  }
  return threads;
}

std::string to_json(const SearchReport& report, bool timing) {
  return report_json(report, timing).dump(2) + "\n";
}

namespace {

struct EffectiveBounds {
  std::optional<int> entry;
  std::optional<int> product;
};

EffectiveBounds effective_bounds(int k, int n, const SearchConfig& config) {
  EffectiveBounds b{config.entry_bound, config.product_bound};
  if (n >= k + 1) b.product = std::min(b.product.value_or(4), 4);
  if (b.product) b.entry = std::min(b.entry.value_or(*b.product), *b.product);
  return b;
}

}  // namespace

std::vector<EntryPair> pair_options(int k, int n, const SearchConfig& config) {
  validate_config(config);
  std::vector<EntryPair> options{{0, 0}};
  if (n < 2) return options;
  const EffectiveBounds b = effective_bounds(k, n, config);
  if (!b.entry)
    throw Error(Errc::InfeasibleBounds, "entries of N_{" + std::to_string(k) + "," +
                                            std::to_string(n) +
                                            "} are unbounded; an entry_bound is required");
  for (int p = -1; p >= -*b.entry; --p)
    for (int q = -1; q >= -*b.entry; --q)
      if (!b.product || p * q <= *b.product) options.push_back({p, q});
  if (options.size() == 1)
    throw Error(Errc::InfeasibleBounds, "no nonzero entry pair within bounds");
  return options;
}

SearchReport enumerate_type(int k, int n, const SearchConfig& config) {
  if (k < 0 || n < 1)
    throw Error(Errc::InfeasibleBounds, "need k >= 0 and n >= 1");
  if (n > detail::kMaxWorkDim)
    throw Error(Errc::IndexOutOfRange,
                "enumeration supports n <= " + std::to_string(detail::kMaxWorkDim));
  const auto start = Clock::now();
  SearchReport report;
  report.query = "enumerate";
  report.k = k;
  report.n = n;
  report.config = config;
  const auto options = pair_options(k, n, config);
  if (n >= 2) {
    const EffectiveBounds b = effective_bounds(k, n, config);
    report.effective_entry_bound = b.entry;
    report.effective_product_bound = b.product;
  }

  std::vector<Gcm> found;
  if (n == 1) {
    if (k == 0) found.push_back(Gcm{});
  } else {
    Deadline deadline(config.time_budget);
    Enumerator engine(k, n, config.compact_only, options, deadline);
    Node root;
    root.matrix.dim = 1;
    root.matrix(0, 0) = 2;
    root.table = {0, subset_code::pack(0, false)};

    // Split the top of the tree into independent subtrees for the workers.
    const int threads = resolve_threads(config);
    std::vector<Node> frontier{root};
    while (threads > 1 && frontier.size() < std::size_t(32) * threads &&
           frontier.front().matrix.dim + 1 < n && !deadline.expired()) {
      std::vector<Node> next;
      for (const auto& node : frontier) {
        auto children = engine.expand(node);
        std::move(children.begin(), children.end(), std::back_inserter(next));
      }
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    std::vector<std::vector<WorkMatrix>> results(frontier.size());
    parallel_for(frontier.size(), threads,
                 [&](std::size_t i) { engine.dfs(frontier[i], results[i]); });
    for (const auto& part : results)
      for (const auto& w : part) found.push_back(to_gcm(w));
    report.exhausted = !deadline.expired();
  }
  sort_and_store(std::move(found), report);
  report.elapsed_seconds = seconds_since(start);
  return report;
}

SearchReport extension_closure(const std::vector<Gcm>& seeds, int k, const SearchConfig& config) {
  validate_config(config);
  const auto start = Clock::now();
  SearchReport report;
  report.query = "closure";
  report.k = k;
  report.config = config;
  std::set<int> dims;
  for (const auto& s : seeds) {
    if (s.dim() + 1 > detail::kMaxWorkDim)
      throw Error(Errc::IndexOutOfRange,
                  "extension supports dimension <= " + std::to_string(detail::kMaxWorkDim));
    if (!is_indecomposable(s)) throw Error(Errc::Decomposable, "closure seed is decomposable");
    dims.insert(s.dim() + 1);
  }
  if (dims.size() == 1) {
    report.n = *dims.begin();
    const EffectiveBounds b = effective_bounds(k, report.n, config);
    report.effective_entry_bound = b.entry;
    report.effective_product_bound = b.product;
  }

  Deadline deadline(config.time_budget);
  std::vector<std::vector<Gcm>> results(seeds.size());
  parallel_for(seeds.size(), resolve_threads(config), [&](std::size_t i) {
    const Gcm& seed = seeds[i];
    const int n = seed.dim() + 1;
    const auto options = pair_options(k, n, config);
    const auto base = WorkMatrix::from(seed.matrix());
    const auto table = detail::full_table(base);
    detail::VertexAttacher attacher(base, table, {n, k, config.compact_only}, options);
    std::uint32_t ticks = 0;
    attacher.run(
        [&](const detail::VertexAttacher::Attachment& at) {
          if (!deadline.tick(ticks)) return false;
          if (accept_full(at.table, n, k, config.compact_only))
            results[i].push_back(canonical_form(to_gcm(at.matrix)).matrix);
          return true;
        },
        {}, &deadline.flag());
  });
  std::vector<Gcm> found;
  for (auto& part : results) std::move(part.begin(), part.end(), std::back_inserter(found));
  report.exhausted = !deadline.expired();
  sort_and_store(std::move(found), report);
  report.findings.push_back(std::to_string(seeds.size()) + " seeds, " +
                            count_phrase(report.representatives.size()) + " of type N_" +
                            std::to_string(k) + ", " + exhaust_phrase(report));
  report.elapsed_seconds = seconds_since(start);
  return report;
}

SearchReport verify_min_dimension(int k, const SearchConfig& config) {
  if (k < 2) throw Error(Errc::InfeasibleBounds, "minimum-dimension check needs k >= 2");
  validate_config(config);
  const auto start = Clock::now();
  SearchReport report;
  report.query = "min-dim";
  report.k = k;
  report.config = config;
  bool ok = true;
  for (int m = 1; m <= k; ++m) {
    SearchReport step = out_of_time(config, start)
                            ? skipped("enumerate", k, m, config, "budget exhausted")
                            : enumerate_type(k, m, with_remaining(config, start));
    const bool empty = step.representatives.empty();
    if (m < k) {
      ok = ok && empty && step.exhausted;
      report.findings.push_back("n=" + std::to_string(m) + ": " + (empty ? "empty" : "NOT empty") +
                                ", " + exhaust_phrase(step));
    } else {
      ok = ok && !empty;
      report.findings.push_back("n=" + std::to_string(m) + ": " +
                                (empty ? "no witness" : "witness found, " +
                                                            count_phrase(step.representatives.size())) +
                                ", " + exhaust_phrase(step));
      report.representatives = step.representatives;
      report.n = m;
    }
    report.exhausted = report.exhausted && step.exhausted;
    report.steps.push_back(std::move(step));
  }
  report.findings.push_back(ok ? "minimum dimension of N_" + std::to_string(k) + " is " +
                                     std::to_string(k) + " within bounds"
                               : "minimum dimension claim NOT confirmed");
  report.verdict = ok;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

SearchReport verify_max_dimension_n3(const SearchConfig& config) {
  validate_config(config);
  const auto start = Clock::now();
  SearchConfig base = config;
  base.product_bound = 4;
  base.compact_only = false;
  SearchConfig compact = base;
  compact.compact_only = true;

  SearchReport report;
  report.query = "max-dim-n3";
  report.k = 3;
  report.config = base;
  report.effective_product_bound = 4;
  report.effective_entry_bound = 4;

  auto run = [&](auto&& fn, const char* what, int n, const SearchConfig& c) {
    SearchReport step = out_of_time(config, start) ? skipped(what, 3, n, c, "budget exhausted")
                                                   : fn(with_remaining(c, start));
    report.exhausted = report.exhausted && step.exhausted;
    report.steps.push_back(std::move(step));
    return report.steps.back();
  };

  // Compact branch.
  const SearchReport c5 =
      run([](const SearchConfig& c) { return enumerate_type(3, 5, c); }, "enumerate", 5, compact);
  const SearchReport c6 =
      run([](const SearchConfig& c) { return enumerate_type(3, 6, c); }, "enumerate", 6, compact);
  const bool a1_present = contains_class(c5, fixture("A1_compact_5x5").matrix);
  report.findings.push_back("compact N_{3,5}: " + count_phrase(c5.representatives.size()) + ", " +
                            exhaust_phrase(c5));
  report.findings.push_back(std::string("A1_compact_5x5 among compact N_{3,5}: ") +
                            (a1_present ? "yes" : "no"));
  report.findings.push_back("compact N_{3,6}: " + count_phrase(c6.representatives.size()) + ", " +
                            exhaust_phrase(c6));
  const bool compact_ok = !c5.representatives.empty() && c6.representatives.empty() &&
                          c5.exhausted && c6.exhausted;

  // Non-compact branch over the three dimension-10 seeds.
  const std::vector<Gcm> seeds10 = {fixture("H_2_77_10").matrix, fixture("H_2_78_10").matrix,
                                        fixture("H_2_79_10").matrix};
  const SearchReport closure = run(
      [&](const SearchConfig& c) { return extension_closure(seeds10, 3, c); }, "closure", 11,
      base);
  report.findings.push_back("N_{3,11} from the three seeds: " +
                            count_phrase(closure.representatives.size()) + ", " +
                            exhaust_phrase(closure));

  const Gcm& h274 = fixture("H_2_74_9").matrix;
  std::vector<EntryPair> pairs(h274.dim(), EntryPair{0, 0});
  pairs.back() = {-1, -1};
  const Gcm rebuilt = attach_vertex(h274, pairs);
  const bool rebuilt_ok = canonical_form(rebuilt).key ==
                              canonical_form(fixture("final_10x10").matrix).key &&
                          nk_type(rebuilt).k == 3;
  report.findings.push_back(std::string("H_2_74_9 + (-1,-1) on its last vertex reproduces "
                                        "final_10x10 as an N_{3,10}: ") +
                            (rebuilt_ok ? "yes" : "no"));
  const bool noncompact_ok = closure.representatives.empty() && closure.exhausted && rebuilt_ok;

  // Stretch: all dimension-10 hyperbolic seeds and direct enumerations.
  const SearchReport h10 =
      run([](const SearchConfig& c) { return enumerate_type(2, 10, c); }, "enumerate", 10, base);
  std::set<CanonicalKey> seed_keys;
  for (const auto& s : seeds10) seed_keys.insert(canonical_form(s).key);
  std::size_t extra = 0;
  std::size_t matched = 0;
  for (const auto& g : h10.representatives)
    (seed_keys.count(serialize_key(g.matrix())) ? matched : extra)++;
  report.findings.push_back("N_{2,10}: " + count_phrase(h10.representatives.size()) + ", " +
                            exhaust_phrase(h10) + "; matches the three seeds: " +
                            std::to_string(matched) + "; beyond them: " + std::to_string(extra));
  const SearchReport all_closure = run(
      [&](const SearchConfig& c) { return extension_closure(h10.representatives, 3, c); },
      "closure", 11, base);
  report.findings.push_back("N_{3,11} from all N_{2,10} seeds: " +
                            count_phrase(all_closure.representatives.size()) + ", " +
                            exhaust_phrase(all_closure));
  const SearchReport n10 =
      run([](const SearchConfig& c) { return enumerate_type(3, 10, c); }, "enumerate", 10, base);
  report.findings.push_back("N_{3,10} (direct): " + count_phrase(n10.representatives.size()) +
                            ", " + exhaust_phrase(n10) + "; contains final_10x10: " +
                            (contains_class(n10, fixture("final_10x10").matrix) ? "yes" : "no"));
  const SearchReport n11 =
      run([](const SearchConfig& c) { return enumerate_type(3, 11, c); }, "enumerate", 11, base);
  report.findings.push_back("N_{3,11} (direct): " + count_phrase(n11.representatives.size()) +
                            ", " + exhaust_phrase(n11));
  const SearchReport n12 =
      run([](const SearchConfig& c) { return enumerate_type(3, 12, c); }, "enumerate", 12, base);
  report.findings.push_back("N_{3,12} (direct): " + count_phrase(n12.representatives.size()) +
                            ", " + exhaust_phrase(n12));

  // Compact dimensions beyond 6, up to the first empty level.
  int compact_max = c6.representatives.empty() ? 5 : 6;
  for (int m = 7; m <= detail::kMaxWorkDim && compact_max == m - 1; ++m) {
    const SearchReport cm = run([m](const SearchConfig& c) { return enumerate_type(3, m, c); },
                                "enumerate", m, compact);
    if (!cm.representatives.empty()) compact_max = m;
  }
  report.findings.push_back("largest compact N_3 dimension found: " +
                            std::to_string(compact_max));

  report.findings.push_back(std::string("compact supremum 5: ") +
                            (compact_ok ? "confirmed" : "NOT confirmed"));
  report.findings.push_back(std::string("non-compact supremum 10: ") +
                            (noncompact_ok ? "confirmed" : "NOT confirmed"));
  report.verdict = compact_ok && noncompact_ok;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

SearchReport verify_upper_bound(int k, const SearchConfig& config) {
  if (k < 2) throw Error(Errc::InfeasibleBounds, "upper-bound check needs k >= 2");
  validate_config(config);
  const auto start = Clock::now();
  SearchReport report;
  report.query = "upper-bound";
  report.k = k;
  report.config = config;
  bool ok = true;

  // level[j][m] = canonical N_{j,m} representatives.
  std::map<int, std::vector<Gcm>> previous;
  for (int j = 2; j <= k; ++j) {
    std::map<int, std::vector<Gcm>> current;
    std::vector<int> dims;
    if (j == 2) {
      for (int m = 2; m <= 8 + j + 1; ++m) dims.push_back(m);
    } else {
      for (const auto& [m, reps] : previous)
        if (!reps.empty()) dims.push_back(m + 1);
    }
    for (int m : dims) {
      SearchReport step;
      if (m <= j && !config.entry_bound) {
        step = skipped(j == 2 ? "enumerate" : "closure", j, m, config,
                       "entries unbounded at n <= k without an entry bound");
      } else if (out_of_time(config, start)) {
        step = skipped(j == 2 ? "enumerate" : "closure", j, m, config, "budget exhausted");
      } else if (j == 2) {
        step = enumerate_type(j, m, with_remaining(config, start));
      } else {
        step = extension_closure(previous[m - 1], j, with_remaining(config, start));
      }
      current[m] = step.representatives;
      report.exhausted = report.exhausted && step.exhausted;
      report.steps.push_back(std::move(step));
    }
    int max_dim = 0;
    for (const auto& [m, reps] : current)
      if (!reps.empty()) max_dim = std::max(max_dim, m);
    const bool level_ok = max_dim <= 8 + j;
    ok = ok && level_ok;
    report.findings.push_back("N_" + std::to_string(j) + ": max dimension found " +
                              std::to_string(max_dim) + " (bound 8+" + std::to_string(j) + " = " +
                              std::to_string(8 + j) + ")" + (level_ok ? "" : " VIOLATED"));
    previous = std::move(current);
  }
  if (!report.exhausted)
    report.findings.push_back("some levels were not covered completely; see steps");
  report.verdict = ok;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace gcmforge
