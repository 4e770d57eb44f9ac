#include <atomic>
#include <cstdlib>
#include <string_view>

#include "pclab/kernels.hpp"

namespace pclab::kernels {

namespace {

std::atomic<int> g_override{-1};

bool cpu_has_avx2() {
#if defined(PCLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("PCLAB_ISA")) {
    const std::string_view v(env);
    if (v == "scalar") return Isa::scalar;
    if (v == "avx2" && cpu_has_avx2()) return Isa::avx2;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() {
  const int o = g_override.load(std::memory_order_relaxed);
  if (o >= 0) return static_cast<Isa>(o);
  static const Isa detected = detect();
  return detected;
}

void set_isa_override(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa)) isa = Isa::scalar;
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

#if defined(PCLAB_HAVE_AVX2)
#define PCLAB_DISPATCH(fn, ...) \
  return active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#else
#define PCLAB_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void image_table(std::span<const Mask> rows, std::span<Mask> table) {
  PCLAB_DISPATCH(image_table, rows, table);
}
std::optional<Mask> first_reflexive_gap(std::span<const Mask> table) {
  PCLAB_DISPATCH(first_reflexive_gap, table);
}
std::optional<PairHit> first_asymmetric_pair(std::span<const Mask> table) {
  PCLAB_DISPATCH(first_asymmetric_pair, table);
}
std::optional<PairHit> first_uncovered_pair(std::span<const Mask> lhs, std::span<const Mask> rhs) {
  PCLAB_DISPATCH(first_uncovered_pair, lhs, rhs);
}
std::optional<Mask> first_interpolant(std::span<const Mask> table, Mask lower, Mask upper) {
  PCLAB_DISPATCH(first_interpolant, table, lower, upper);
}
std::optional<Mask> first_separated(std::span<const Mask> table, Mask a) {
  PCLAB_DISPATCH(first_separated, table, a);
}
std::optional<Mask> first_disconnected(std::span<const Mask> table) {
  PCLAB_DISPATCH(first_disconnected, table);
}

#undef PCLAB_DISPATCH

}  // namespace pclab::kernels
