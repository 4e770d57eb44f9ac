#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace pclab {

/// Set of atom indices of a finite Boolean algebra; bit i <-> atom i.
using Mask = std::uint32_t;
/// Set of point indices of a finite space; bit i <-> point i.
using PointSet = std::uint64_t;

inline constexpr int kMaskBits = 32;
inline constexpr int kPointBits = 64;

template <class T>
constexpr T low_bits(int n) {
  return n >= static_cast<int>(sizeof(T) * 8) ? ~T{0} : (T{1} << n) - T{1};
}

template <class T>
constexpr bool has_bit(T set, int i) {
  return ((set >> i) & T{1}) != 0;
}

template <class T>
constexpr T bit(int i) {
  return T{1} << i;
}

template <class T, class F>
void for_each_bit(T set, F&& f) {
  while (set != 0) {
    f(std::countr_zero(set));
    set &= set - 1;
  }
}

template <class T>
std::vector<int> bit_indices(T set) {
  std::vector<int> out;
  for_each_bit(set, [&](int i) { out.push_back(i); });
  return out;
}

/// Canonical order on supports: by cardinality, then by value.
template <class T>
constexpr bool support_less(T a, T b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

/// "{0,2,5}"
template <class T>
std::string format_indices(T set) {
  std::string s = "{";
  bool first = true;
  for_each_bit(set, [&](int i) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  });
  return s + "}";
}

/// "{a,c}" using the given names.
template <class T>
std::string format_named(T set, const std::vector<std::string>& names) {
  std::string s = "{";
  bool first = true;
  for_each_bit(set, [&](int i) {
    if (!first) s += ',';
    s += i < static_cast<int>(names.size()) ? names[i] : std::to_string(i);
    first = false;
  });
  return s + "}";
}

}  // namespace pclab
