#include "gcmforge/feasibility.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace gcmforge {

namespace {

using Row = std::vector<BigInt>;
using System = std::map<Row, bool>;  // normalized coefficients -> strict

void insert(System& sys, Row coeffs, bool strict) {
  BigInt g = 0;
  for (const auto& c : coeffs) g = boost::multiprecision::gcd(g, c);
  if (g == 0) {
    sys[std::move(coeffs)] |= strict;  // 0 > 0 or 0 >= 0
    return;
  }
  if (g != 1)
    for (auto& c : coeffs) c /= g;
  auto [it, inserted] = sys.emplace(std::move(coeffs), strict);
  if (!inserted) it->second = it->second || strict;
}

bool all_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const BigInt& c) { return c == 0; });
}

}  // namespace

FeasibilityResult solve_homogeneous(const std::vector<HomogeneousConstraint>& system,
                                    int variables, std::size_t max_constraints) {
  System current;
  for (const auto& c : system) insert(current, c.coeffs, c.strict);

  std::vector<System> stages;
  std::vector<int> order;
  std::vector<bool> eliminated(variables, false);

  for (int step = 0; step < variables; ++step) {
    // Cheapest variable first: fewest new rows generated.
    int best = -1;
    long long best_cost = 0;
    for (int v = 0; v < variables; ++v) {
      if (eliminated[v]) continue;
      long long pos = 0, neg = 0;
      for (const auto& entry : current) {
        if (entry.first[v] > 0) ++pos;
        if (entry.first[v] < 0) ++neg;
      }
      const long long cost = pos * neg - pos - neg;
      if (best < 0 || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    stages.push_back(current);
    order.push_back(best);
    eliminated[best] = true;

    System next;
    std::vector<const std::pair<const Row, bool>*> pos, neg;
    for (const auto& entry : current) {
      const BigInt& c = entry.first[best];
      if (c > 0)
        pos.push_back(&entry);
      else if (c < 0)
        neg.push_back(&entry);
      else
        insert(next, entry.first, entry.second);
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        const BigInt a = p->first[best];
        const BigInt b = -q->first[best];
        Row combo(variables);
        for (int v = 0; v < variables; ++v) combo[v] = b * p->first[v] + a * q->first[v];
        insert(next, std::move(combo), p->second || q->second);
        if (next.size() > max_constraints) return {FeasibilityResult::Status::GaveUp, {}};
      }
    }
    current = std::move(next);
  }

  for (const auto& [row, strict] : current)
    if (all_zero(row) && strict) return {FeasibilityResult::Status::Infeasible, {}};

  RationalVector x(variables);
  for (int t = int(order.size()) - 1; t >= 0; --t) {
    const int v = order[t];
    std::optional<Rational> lower, upper;
    for (const auto& entry : stages[t]) {
      const Row& row = entry.first;
      if (row[v] == 0) continue;
      Rational rest = 0;
      for (int w = 0; w < variables; ++w)
        if (w != v && row[w] != 0) rest += Rational(row[w]) * x[w];
      const Rational bound = -rest / Rational(row[v]);
      if (row[v] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    if (lower && upper)
      x[v] = (*lower == *upper) ? *lower : (*lower + *upper) / 2;
    else if (lower)
      x[v] = *lower + 1;
    else if (upper)
      x[v] = *upper - 1;
    else
      x[v] = 1;
  }
  return {FeasibilityResult::Status::Feasible, std::move(x)};
}

}  // namespace gcmforge
