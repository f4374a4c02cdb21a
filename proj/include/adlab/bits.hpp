#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace adlab {

/// A subset of a carrier {0, ..., n-1} with n <= 64.
using Subset = std::uint64_t;

inline constexpr int kCarrierLimit = 64;

/// Carrier cap in effect: 64, or lower when ADFRAME_MAX_POINTS is set.
int max_points();

namespace bits {

constexpr Subset full(int n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }
constexpr Subset single(int i) { return Subset{1} << i; }
constexpr bool has(Subset s, int i) { return ((s >> i) & 1U) != 0; }
constexpr bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
inline int count(Subset s) { return std::popcount(s); }
inline int lowest(Subset s) { return std::countr_zero(s); }

/// Canonical order on subsets: by cardinality, then by numeric value.
inline bool canonical_less(Subset a, Subset b) {
  const int ca = count(a);
  const int cb = count(b);
  return ca != cb ? ca < cb : a < b;
}

std::vector<int> elements(Subset s);
Subset from_elements(std::span<const int> xs);
std::string to_string(Subset s);

template <typename F>
void for_each(Subset s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

}  // namespace bits
}  // namespace adlab
