#include "gcmforge/classify.hpp"

#include "gcmforge/error.hpp"
#include "gcmforge/feasibility.hpp"
#include "gcmforge/linalg.hpp"
#include "gcmforge/subset_types.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace gcmforge {

namespace {

void require_indecomposable(const Gcm& a, std::string_view op) {
  if (!is_indecomposable(a))
    throw Error(Errc::Decomposable, std::string(op) + " needs an indecomposable matrix; "
                                                      "classify its components separately");
}

BaseType base_from_k(int k) {
  return k == 0 ? BaseType::Finite : (k == 1 ? BaseType::Affine : BaseType::Indefinite);
}

bool all_positive(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x > 0; });
}

// Positive rescaling to a primitive integer vector; keeps every sign relation.
RationalVector primitive(RationalVector v) {
  BigInt lcm = 1;
  for (const auto& x : v)
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(x)));
  BigInt g = 0;
  for (auto& x : v) {
    x *= lcm;
    g = boost::multiprecision::gcd(g, BigInt(boost::multiprecision::numerator(x)));
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace

std::string_view to_string(BaseType t) noexcept {
  switch (t) {
    case BaseType::Finite: return "Finite";
    case BaseType::Affine: return "Affine";
    case BaseType::Indefinite: return "Indefinite";
  }
  return "?";
}

std::string_view to_string(SignRelation r) noexcept {
  switch (r) {
    case SignRelation::Positive: return "Au>0";
    case SignRelation::Zero: return "Au=0";
    case SignRelation::Negative: return "Au<0";
  }
  return "?";
}

std::string to_string(const TypeLabel& label) {
  return "N_{" + std::to_string(label.k) + "," + std::to_string(label.n) + "} (" +
         (label.compact ? "compact" : "non-compact") + ")";
}

BaseType base_type(const Gcm& a) {
  require_indecomposable(a, "base_type");
  const SubsetTypes types(a.matrix());
  return base_from_k(types.k(types.full_mask()));
}

bool verify_witness(const Gcm& a, const Witness& w) {
  if (int(w.u.size()) != a.dim() || !all_positive(w.u)) return false;
  const RationalVector au = multiply(a.matrix(), w.u);
  return std::all_of(au.begin(), au.end(), [&](const Rational& x) {
    switch (w.relation) {
      case SignRelation::Positive: return x > 0;
      case SignRelation::Zero: return x == 0;
      case SignRelation::Negative: return x < 0;
    }
    return false;
  });
}

Witness find_witness(const Gcm& a, BaseType t) {
  const BaseType actual = base_type(a);
  if (actual != t)
    throw Error(Errc::TypeMismatch, "matrix is " + std::string(to_string(actual)) + ", not " +
                                        std::string(to_string(t)));
  const int n = a.dim();
  const SquareMatrix& m = a.matrix();

  auto accept = [&](RationalVector u, SignRelation rel) -> std::optional<Witness> {
    Witness w{primitive(std::move(u)), rel};
    if (verify_witness(a, w)) return w;
    return std::nullopt;
  };

  switch (t) {
    case BaseType::Finite: {
      // Finite-type inverses are entrywise positive, so A^{-1}(1,...,1) > 0.
      if (auto u = solve_exact(m, RationalVector(n, Rational(1))))
        if (auto w = accept(*u, SignRelation::Positive)) return *w;
      break;
    }
    case BaseType::Affine: {
      const auto kernel = kernel_basis(m);
      if (kernel.size() == 1) {
        RationalVector u = kernel.front();
        if (u.front() < 0)
          for (auto& x : u) x = -x;
        if (auto w = accept(u, SignRelation::Zero)) return *w;
      }
      break;
    }
    case BaseType::Indefinite: {
      if (auto w = accept(RationalVector(n, Rational(1)), SignRelation::Negative)) return *w;
      if (auto u = solve_exact(m, RationalVector(n, Rational(-1))))
        if (auto w = accept(*u, SignRelation::Negative)) return *w;
      // u > 0 and -Au > 0 as one homogeneous strict system.
      std::vector<HomogeneousConstraint> system;
      for (int i = 0; i < n; ++i) {
        HomogeneousConstraint pos{std::vector<BigInt>(n, 0), true};
        pos.coeffs[i] = 1;
        system.push_back(std::move(pos));
        HomogeneousConstraint row{std::vector<BigInt>(n, 0), true};
        for (int j = 0; j < n; ++j) row.coeffs[j] = -m(i, j);
        system.push_back(std::move(row));
      }
      const auto result = solve_homogeneous(system, n);
      if (result.status == FeasibilityResult::Status::Feasible)
        if (auto w = accept(result.point, SignRelation::Negative)) return *w;
      break;
    }
  }
  throw Error(Errc::WitnessSearchExhausted,
              "no " + std::string(to_string(t)) + " certificate found");
}

TypeLabel nk_type(const Gcm& a) {
  require_indecomposable(a, "nk_type");
  const SubsetTypes types(a.matrix());
  const int k = types.k(types.full_mask());
  return TypeLabel{k, a.dim(), !types.has_affine(types.full_mask()), base_from_k(k)};
}

bool is_compact(const Gcm& a) {
  require_indecomposable(a, "is_compact");
  const SubsetTypes types(a.matrix());
  return !types.has_affine(types.full_mask());
}

std::map<int, int> subtype_profile(const Gcm& a) {
  require_indecomposable(a, "subtype_profile");
  const SubsetTypes types(a.matrix());
  std::map<int, int> profile;
  for (std::uint32_t s = 1; s <= types.full_mask(); ++s) {
    if (!types.connected(s)) continue;
    const int d = std::popcount(s);
    auto [it, inserted] = profile.emplace(d, types.k(s));
    if (!inserted) it->second = std::max(it->second, types.k(s));
  }
  return profile;
}

}  // namespace gcmforge
