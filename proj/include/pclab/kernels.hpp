#pragma once
// Carrier-sweep kernels.
//
// Every exhaustive axiom check over a finite Boolean algebra reduces to scans of an
// "image table" T of length 2^n, where T[a] is the set of atoms related to some atom
// of a. For a precontact relation C given by T, a C b  <=>  (T[a] & b) != 0.
//
// Each kernel has a scalar reference and an AVX2 variant; the active variant is chosen
// at runtime (CPU detection, overridable with PCLAB_ISA=scalar|avx2). All variants
// return identical results, including which hit is reported first: hits are ordered
// row-major (outer index first, then inner index, both ascending).

#include <optional>
#include <span>
#include <string_view>

#include "pclab/bits.hpp"

namespace pclab::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
/// Forces a variant for the current process (tests); nullopt restores detection.
void set_isa_override(std::optional<Isa> isa);

struct PairHit {
  Mask first = 0;
  Mask second = 0;
  friend bool operator==(const PairHit&, const PairHit&) = default;
};

/// table[a] = OR of rows[p] over atoms p in a. Requires table.size() == 2^rows.size().
void image_table(std::span<const Mask> rows, std::span<Mask> table);

/// Smallest a != 0 with (table[a] & a) == 0.
std::optional<Mask> first_reflexive_gap(std::span<const Mask> table);

/// First (a, b) with (table[a] & b) != 0 and (table[b] & a) == 0.
std::optional<PairHit> first_asymmetric_pair(std::span<const Mask> table);

/// First (a, b) with (lhs[a] & b) != 0 and (rhs[a] & b) == 0.
std::optional<PairHit> first_uncovered_pair(std::span<const Mask> lhs, std::span<const Mask> rhs);

/// Smallest b with lower ⊆ b and table[b] ⊆ upper.
std::optional<Mask> first_interpolant(std::span<const Mask> table, Mask lower, Mask upper);

/// Smallest b != 0 with (table[b] & a) == 0.
std::optional<Mask> first_separated(std::span<const Mask> table, Mask a);

/// Smallest a, 0 != a != top, with (table[a] & ~a) == 0 and (table[~a] & a) == 0.
std::optional<Mask> first_disconnected(std::span<const Mask> table);

#define PCLAB_KERNEL_DECLS                                                                  \
  void image_table(std::span<const Mask> rows, std::span<Mask> table);                       \
  std::optional<Mask> first_reflexive_gap(std::span<const Mask> table);                      \
  std::optional<PairHit> first_asymmetric_pair(std::span<const Mask> table);                 \
  std::optional<PairHit> first_uncovered_pair(std::span<const Mask> lhs,                     \
                                              std::span<const Mask> rhs);                    \
  std::optional<Mask> first_interpolant(std::span<const Mask> table, Mask lower, Mask upper); \
  std::optional<Mask> first_separated(std::span<const Mask> table, Mask a);                  \
  std::optional<Mask> first_disconnected(std::span<const Mask> table);

namespace scalar {
PCLAB_KERNEL_DECLS
}
#if defined(PCLAB_HAVE_AVX2)
namespace avx2 {
PCLAB_KERNEL_DECLS
}
#endif

#undef PCLAB_KERNEL_DECLS

}  // namespace pclab::kernels
