#include "gcmforge/extend.hpp"

#include "gcmforge/classify.hpp"
#include "gcmforge/detail/attacher.hpp"
#include "gcmforge/error.hpp"
#include "gcmforge/subset_types.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace gcmforge {

std::string EntryPair::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

const std::vector<EntryPair>& allowed_pairs() {
  static const std::vector<EntryPair> pairs = {
      {0, 0}, {-1, -1}, {-1, -2}, {-2, -1}, {-1, -3}, {-3, -1}, {-1, -4}, {-4, -1}, {-2, -2},
  };
  return pairs;
}

Gcm attach_vertex(const Gcm& base, std::span<const EntryPair> pairs) {
  const int n = base.dim();
  if (int(pairs.size()) != n)
    throw Error(Errc::IndexOutOfRange, "expected " + std::to_string(n) + " entry pairs");
  SquareMatrix m(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = base(i, j);
  for (int j = 0; j < n; ++j) {
    m(n, j) = pairs[j].p;
    m(j, n) = pairs[j].q;
  }
  m(n, n) = 2;
  return validate_gcm(m);
}

RawExtensionStream::RawExtensionStream(Gcm base)
    : base_(std::move(base)), digits_(base_.dim(), 0) {}

std::uint64_t RawExtensionStream::count(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c *= allowed_pairs().size();
  return c - 1;
}

std::optional<ExtensionCandidate> RawExtensionStream::next() {
  const int radix = int(allowed_pairs().size());
  while (!done_) {
    // Advance the odometer (last position fastest) before reading, which
    // skips the all-zero assignment at the start.
    int pos = int(digits_.size()) - 1;
    while (pos >= 0 && ++digits_[pos] == radix) digits_[pos--] = 0;
    if (pos < 0) {
      done_ = true;
      break;
    }
    std::vector<EntryPair> pairs;
    pairs.reserve(digits_.size());
    for (int d : digits_) pairs.push_back(allowed_pairs()[d]);
    Gcm result = attach_vertex(base_, pairs);
    return ExtensionCandidate{base_, std::move(pairs), std::move(result)};
  }
  return std::nullopt;
}

void for_each_extension_to_type(const Gcm& a, int k_target,
                                const std::function<bool(const ExtensionCandidate&)>& visit) {
  const TypeLabel label = nk_type(a);
  if (label.k != k_target - 1)
    throw Error(Errc::TypeMismatch, "seed has type " + to_string(label) +
                                        ", extending to N_" + std::to_string(k_target) +
                                        " needs N_" + std::to_string(k_target - 1));
  if (a.dim() + 1 > detail::kMaxWorkDim)
    throw Error(Errc::IndexOutOfRange, "extension supports dimension <= " +
                                           std::to_string(detail::kMaxWorkDim));
  const auto base = detail::WorkMatrix::from(a.matrix());
  const auto table = detail::full_table(base);
  const detail::TargetBounds bounds{a.dim() + 1, k_target, false};
  detail::VertexAttacher attacher(base, table, bounds, allowed_pairs());
  const std::uint32_t full = (std::uint32_t{1} << (a.dim() + 1)) - 1;
  attacher.run([&](const detail::VertexAttacher::Attachment& at) {
    if (subset_code::k_of(at.table[full]) != k_target) return true;
    std::vector<EntryPair> pairs;
    for (int o : at.choice) pairs.push_back(allowed_pairs()[o]);
    return visit(ExtensionCandidate{a, pairs, validate_gcm(at.matrix.to_square())});
  });
}

std::vector<Gcm> extend_to_type(const Gcm& a, int k_target, std::size_t limit) {
  std::vector<Gcm> out;
  for_each_extension_to_type(a, k_target, [&](const ExtensionCandidate& c) {
    out.push_back(c.result);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

std::vector<Rational> candidate_d_new(const SymmetrizerDiagonal& d) {
  static const Rational ratios[] = {Rational(1),    Rational(2),    Rational(3),
                                    Rational(4),    Rational(1, 2), Rational(1, 3),
                                    Rational(1, 4)};
  std::set<Rational> values{Rational(1)};
  for (const auto& di : d.d)
    for (const auto& r : ratios) values.insert(Rational(di) * r);
  return {values.begin(), values.end()};
}

std::vector<std::vector<EntryPair>> symmetric_pair_options(const SymmetrizerDiagonal& d,
                                                           const Rational& d_new,
                                                           int max_product) {
  std::vector<std::vector<EntryPair>> options(d.d.size());
  for (std::size_t i = 0; i < d.d.size(); ++i)
    for (const auto& pair : allowed_pairs())
      if (pair.p * pair.q <= max_product &&
          Rational(d.d[i]) * pair.q == d_new * pair.p)  // d_i a_{i,new} = d_new a_{new,i}
        options[i].push_back(pair);
  return options;
}

std::vector<SymmetrizableExtension> symmetrizable_extensions(const Gcm& a,
                                                             const SymmetrizerDiagonal& d,
                                                             const Rational& d_new,
                                                             int max_product) {
  if (!symmetrizes(a, d))
    throw Error(Errc::NotSymmetrizable, d.to_string() + " does not symmetrize the matrix");
  const auto options = symmetric_pair_options(d, d_new, max_product);
  std::vector<Rational> extended(d.d.begin(), d.d.end());
  extended.push_back(d_new);

  std::vector<SymmetrizableExtension> out;
  std::vector<EntryPair> pairs(a.dim());
  auto recurse = [&](auto&& self, int pos, bool any_nonzero) -> void {
    if (pos == a.dim()) {
      if (!any_nonzero) return;
      Gcm result = attach_vertex(a, pairs);
      if (!symmetrizes(result, extended))
        throw Error(Errc::NotSymmetrizable, "extension lost symmetrizability");
      out.push_back({d_new, ExtensionCandidate{a, pairs, std::move(result)}});
      return;
    }
    for (const auto& pair : options[pos]) {
      pairs[pos] = pair;
      self(self, pos + 1, any_nonzero || !pair.is_zero());
    }
  };
  recurse(recurse, 0, false);
  return out;
}

std::vector<SymmetrizableExtension> symmetrizable_extensions(const Gcm& a,
                                                             const SymmetrizerDiagonal& d,
                                                             int max_product) {
  if (!symmetrizes(a, d))
    throw Error(Errc::NotSymmetrizable, d.to_string() + " does not symmetrize the matrix");
  std::vector<SymmetrizableExtension> out;
  for (const auto& d_new : candidate_d_new(d)) {
    auto part = symmetrizable_extensions(a, d, d_new, max_product);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

bool verify_containment(const Gcm& big, int k) {
  if (k < 2 || !is_indecomposable(big)) return false;
  const SubsetTypes types(big.matrix());
  const int n = big.dim();
  if (types.k(types.full_mask()) != k) return false;
  bool found_at_n_minus_1 = false;
  for (std::uint32_t s = 1; s < types.full_mask(); ++s) {
    if (types.k(s) != k - 1 || !types.connected(s)) continue;
    const int size = std::popcount(s);
    if (size < n - 1) return false;
    found_at_n_minus_1 = true;
  }
  return k == 2 || found_at_n_minus_1;
}

}  // namespace gcmforge
