#include "gcmforge/symmetrize.hpp"

#include "gcmforge/error.hpp"

#include <optional>

namespace gcmforge {

namespace {

// Rational d per vertex, d[root of each component] = 1; nullopt on an
// inconsistent cycle.
std::optional<std::vector<Rational>> propagate(const Gcm& a, int first_root) {
  const int n = a.dim();
  std::vector<Rational> d(n, Rational(0));
  std::vector<int> order;
  order.reserve(n);
  auto bfs = [&](int root) {
    d[root] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const int i = order[head++];
      for (int j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0 || d[j] != 0) continue;
        d[j] = d[i] * make_rational(a(i, j), a(j, i));  // d_i a_ij = d_j a_ji
        order.push_back(j);
      }
    }
  };
  bfs(first_root);
  for (int v = 0; v < n; ++v)
    if (d[v] == 0) bfs(v);
  if (!symmetrizes(a, d)) return std::nullopt;
  return d;
}

SymmetrizerDiagonal normalize(const std::vector<Rational>& d) {
  BigInt lcm = 1;
  for (const auto& x : d)
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(x)));
  SymmetrizerDiagonal out;
  BigInt g = 0;
  for (const auto& x : d) {
    out.d.push_back(BigInt(boost::multiprecision::numerator(Rational(x * lcm))));
    g = boost::multiprecision::gcd(g, out.d.back());
  }
  for (auto& x : out.d) x /= g;
  return out;
}

}  // namespace

std::string SymmetrizerDiagonal::to_string() const {
  std::string out = "diag(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + d[i].str();
  return out + ")";
}

bool symmetrizes(const Gcm& a, const std::vector<Rational>& d) {
  if (int(d.size()) != a.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (d[i] <= 0) return false;
    for (int j = i + 1; j < a.dim(); ++j)
      if (d[i] * a(i, j) != d[j] * a(j, i)) return false;
  }
  return true;
}

bool symmetrizes(const Gcm& a, const SymmetrizerDiagonal& d) {
  std::vector<Rational> r(d.d.begin(), d.d.end());
  return symmetrizes(a, r);
}

bool is_symmetrizable(const Gcm& a) { return propagate(a, 0).has_value(); }

SymmetrizerDiagonal symmetrizer_from(const Gcm& a, int root) {
  if (root < 0 || root >= a.dim())
    throw Error(Errc::IndexOutOfRange, "root " + std::to_string(root + 1));
  if (!is_indecomposable(a))
    throw Error(Errc::Decomposable, "symmetrizer is only unique up to scale per component");
  const auto d = propagate(a, root);
  if (!d) throw Error(Errc::NotSymmetrizable, "opposite cycle products differ");
  SymmetrizerDiagonal out = normalize(*d);
  if (!symmetrizes(a, out)) throw Error(Errc::NotSymmetrizable, "normalization check failed");
  return out;
}

SymmetrizerDiagonal symmetrizer(const Gcm& a) { return symmetrizer_from(a, 0); }

bool check_entry_rules(const Gcm& a, const SymmetrizerDiagonal& d) {
  if (int(d.d.size()) != a.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (i == j || a(i, j) == 0) continue;
      // a_ij = k * (d_j / d_i)  <=>  a_ij d_i / d_j is an integer.
      if ((BigInt(a(i, j)) * d.d[i]) % d.d[j] != 0) return false;
      const BigInt g = boost::multiprecision::gcd(d.d[i], d.d[j]);
      if (g == 1 && !(d.d[i] == 1 && d.d[j] == 1)) {
        if (BigInt(a(i, j)) % d.d[j] != 0 || BigInt(a(j, i)) % d.d[i] != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace gcmforge
