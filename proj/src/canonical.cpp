#include "gcmforge/canonical.hpp"

#include "gcmforge/detail/attacher.hpp"
#include "gcmforge/detail/canonical_impl.hpp"

namespace gcmforge {

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

CanonicalKey serialize_key(const SquareMatrix& a) {
  CanonicalKey key;
  key.bytes.reserve(2 + std::size_t(a.dim()) * a.dim() * 8);
  key.bytes += char((a.dim() >> 8) & 0xff);
  key.bytes += char(a.dim() & 0xff);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      const std::uint64_t enc = std::uint64_t(-a(i, j)) ^ (std::uint64_t{1} << 63);
      for (int b = 7; b >= 0; --b) key.bytes += char((enc >> (8 * b)) & 0xff);
    }
  }
  return key;
}

CanonicalForm canonical_form(const Gcm& a) {
  std::vector<int> perm = detail::minimal_permutation(a.matrix());
  Gcm canon = a.permuted(perm);
  CanonicalKey key = serialize_key(canon.matrix());
  return {std::move(canon), std::move(key), std::move(perm)};
}

bool is_canonical(const SquareMatrix& a) { return detail::is_minimal(a); }

}  // namespace gcmforge
