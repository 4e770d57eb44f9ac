// AVX2 variants of the carrier-sweep kernels: eight uint32 carrier elements per step.
// Tables always have power-of-two length; tables shorter than one vector go to scalar.

#include <immintrin.h>

#include <bit>
#include <cstddef>

#include "pclab/kernels.hpp"

namespace pclab::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 8;

inline __m256i iota(std::size_t base) {
  return _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(base)),
                          _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
}

inline __m256i load(const Mask* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

inline __m256i is_zero(__m256i v) { return _mm256_cmpeq_epi32(v, _mm256_setzero_si256()); }

inline unsigned lanes(__m256i v) {
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(v)));
}

inline __m256i splat(Mask m) { return _mm256_set1_epi32(static_cast<int>(m)); }

}  // namespace

void image_table(std::span<const Mask> rows, std::span<Mask> table) {
  table[0] = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t half = std::size_t{1} << k;
    if (half < kLanes) {
      for (std::size_t a = 0; a < half; ++a) table[half + a] = table[a] | rows[k];
      continue;
    }
    const __m256i row = splat(rows[k]);
    for (std::size_t a = 0; a < half; a += kLanes) {
      const __m256i v = _mm256_or_si256(load(table.data() + a), row);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(table.data() + half + a), v);
    }
  }
}

std::optional<Mask> first_reflexive_gap(std::span<const Mask> table) {
  const std::size_t size = table.size();
  if (size < kLanes) return scalar::first_reflexive_gap(table);
  for (std::size_t a = 0; a < size; a += kLanes) {
    unsigned hit = lanes(is_zero(_mm256_and_si256(load(table.data() + a), iota(a))));
    if (a == 0) hit &= ~1u;
    if (hit != 0) return static_cast<Mask>(a + std::countr_zero(hit));
  }
  return std::nullopt;
}

std::optional<PairHit> first_asymmetric_pair(std::span<const Mask> table) {
  const std::size_t size = table.size();
  if (size < kLanes) return scalar::first_asymmetric_pair(table);
  for (std::size_t a = 0; a < size; ++a) {
    const Mask ta = table[a];
    if (ta == 0) continue;
    const __m256i va = splat(ta);
    const __m256i aa = splat(static_cast<Mask>(a));
    for (std::size_t b = 0; b < size; b += kLanes) {
      const __m256i forward_zero = is_zero(_mm256_and_si256(va, iota(b)));
      const __m256i backward_zero = is_zero(_mm256_and_si256(load(table.data() + b), aa));
      const unsigned hit = lanes(_mm256_andnot_si256(forward_zero, backward_zero));
      if (hit != 0)
        return PairHit{static_cast<Mask>(a), static_cast<Mask>(b + std::countr_zero(hit))};
    }
  }
  return std::nullopt;
}

std::optional<PairHit> first_uncovered_pair(std::span<const Mask> lhs, std::span<const Mask> rhs) {
  const std::size_t size = lhs.size();
  if (size < kLanes) return scalar::first_uncovered_pair(lhs, rhs);
  for (std::size_t a = 0; a < size; ++a) {
    if ((lhs[a] & ~rhs[a]) == 0) continue;
    const __m256i l = splat(lhs[a]);
    const __m256i r = splat(rhs[a]);
    for (std::size_t b = 0; b < size; b += kLanes) {
      const __m256i idx = iota(b);
      const __m256i l_zero = is_zero(_mm256_and_si256(l, idx));
      const __m256i r_zero = is_zero(_mm256_and_si256(r, idx));
      const unsigned hit = lanes(_mm256_andnot_si256(l_zero, r_zero));
      if (hit != 0)
        return PairHit{static_cast<Mask>(a), static_cast<Mask>(b + std::countr_zero(hit))};
    }
  }
  return std::nullopt;
}

std::optional<Mask> first_interpolant(std::span<const Mask> table, Mask lower, Mask upper) {
  const std::size_t size = table.size();
  if (size < kLanes) return scalar::first_interpolant(table, lower, upper);
  const __m256i lo = splat(lower);
  const __m256i outside = splat(~upper);
  for (std::size_t b = 0; b < size; b += kLanes) {
    const __m256i contains_lower = is_zero(_mm256_andnot_si256(iota(b), lo));
    const __m256i image_inside = is_zero(_mm256_and_si256(load(table.data() + b), outside));
    const unsigned hit = lanes(_mm256_and_si256(contains_lower, image_inside));
    if (hit != 0) return static_cast<Mask>(b + std::countr_zero(hit));
  }
  return std::nullopt;
}

std::optional<Mask> first_separated(std::span<const Mask> table, Mask a) {
  const std::size_t size = table.size();
  if (size < kLanes) return scalar::first_separated(table, a);
  const __m256i va = splat(a);
  for (std::size_t b = 0; b < size; b += kLanes) {
    unsigned hit = lanes(is_zero(_mm256_and_si256(load(table.data() + b), va)));
    if (b == 0) hit &= ~1u;
    if (hit != 0) return static_cast<Mask>(b + std::countr_zero(hit));
  }
  return std::nullopt;
}

std::optional<Mask> first_disconnected(std::span<const Mask> table) {
  const std::size_t size = table.size();
  if (size < kLanes) return scalar::first_disconnected(table);
  const Mask top = static_cast<Mask>(size - 1);
  const __m256i vtop = splat(top);
  const int* base = reinterpret_cast<const int*>(table.data());
  for (std::size_t a = 0; a < size; a += kLanes) {
    const __m256i idx = iota(a);
    const __m256i rest = _mm256_xor_si256(idx, vtop);
    const __m256i out_zero = is_zero(_mm256_and_si256(load(table.data() + a), rest));
    const __m256i in_zero = is_zero(_mm256_and_si256(_mm256_i32gather_epi32(base, rest, 4), idx));
    unsigned hit = lanes(_mm256_and_si256(out_zero, in_zero));
    if (a == 0) hit &= ~1u;
    if (a + kLanes == size) hit &= ~(1u << 7);
    if (hit != 0) return static_cast<Mask>(a + std::countr_zero(hit));
  }
  return std::nullopt;
}

}  // namespace pclab::kernels::avx2
