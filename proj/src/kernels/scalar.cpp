#include <cstddef>

#include "pclab/kernels.hpp"

namespace pclab::kernels::scalar {

void image_table(std::span<const Mask> rows, std::span<Mask> table) {
  table[0] = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t half = std::size_t{1} << k;
    for (std::size_t a = 0; a < half; ++a) table[half + a] = table[a] | rows[k];
  }
}

std::optional<Mask> first_reflexive_gap(std::span<const Mask> table) {
  for (std::size_t a = 1; a < table.size(); ++a)
    if ((table[a] & static_cast<Mask>(a)) == 0) return static_cast<Mask>(a);
  return std::nullopt;
}

std::optional<PairHit> first_asymmetric_pair(std::span<const Mask> table) {
  const std::size_t size = table.size();
  for (std::size_t a = 0; a < size; ++a) {
    const Mask ta = table[a];
    if (ta == 0) continue;
    for (std::size_t b = 0; b < size; ++b)
      if ((ta & b) != 0 && (table[b] & a) == 0)
        return PairHit{static_cast<Mask>(a), static_cast<Mask>(b)};
  }
  return std::nullopt;
}

std::optional<PairHit> first_uncovered_pair(std::span<const Mask> lhs, std::span<const Mask> rhs) {
  const std::size_t size = lhs.size();
  for (std::size_t a = 0; a < size; ++a) {
    const Mask gap = lhs[a] & ~rhs[a];
    if (gap == 0) continue;
    for (std::size_t b = 0; b < size; ++b)
      if ((lhs[a] & b) != 0 && (rhs[a] & b) == 0)
        return PairHit{static_cast<Mask>(a), static_cast<Mask>(b)};
  }
  return std::nullopt;
}

std::optional<Mask> first_interpolant(std::span<const Mask> table, Mask lower, Mask upper) {
  for (std::size_t b = 0; b < table.size(); ++b)
    if ((lower & ~static_cast<Mask>(b)) == 0 && (table[b] & ~upper) == 0)
      return static_cast<Mask>(b);
  return std::nullopt;
}

std::optional<Mask> first_separated(std::span<const Mask> table, Mask a) {
  for (std::size_t b = 1; b < table.size(); ++b)
    if ((table[b] & a) == 0) return static_cast<Mask>(b);
  return std::nullopt;
}

std::optional<Mask> first_disconnected(std::span<const Mask> table) {
  const std::size_t size = table.size();
  const Mask top = static_cast<Mask>(size - 1);
  for (std::size_t a = 1; a + 1 < size; ++a) {
    const Mask m = static_cast<Mask>(a);
    const Mask rest = top & ~m;
    if ((table[a] & rest) == 0 && (table[rest] & m) == 0) return m;
  }
  return std::nullopt;
}

}  // namespace pclab::kernels::scalar
