#include "gcmforge/subset_types.hpp"

#include "gcmforge/error.hpp"

namespace gcmforge {

SubsetTypes::SubsetTypes(const SquareMatrix& a) : dim_(a.dim()), adj_(a.dim(), 0) {
  if (dim_ > kMaxDim)
    throw Error(Errc::IndexOutOfRange, "subset classification supports dimension <= " +
                                           std::to_string(kMaxDim));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (i != j && a(i, j) != 0) adj_[i] |= std::uint32_t{1} << j;
  table_.assign(std::size_t{1} << dim_, 0);
  auto entry = [&a](int i, int j) { return a(i, j); };
  for (std::uint32_t s = 1; s <= full_mask(); ++s)
    table_[s] = subset_code::evaluate(s, adj_.data(), table_.data(), entry);
}

}  // namespace gcmforge
