// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cfmimo authors
#pragma once

#include <complex>
#include <cstdint>
#include <cstring>
#include <random>

namespace cfm {

/// splitmix64 finalizer; scrambles a 64-bit word into a well-mixed one.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t seed_combine(std::uint64_t h, std::uint64_t v) {
  return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

/// Derives an independent stream seed from a base seed and any number of
/// integer tags (sweep index, drop index, realization index, ...).
template <typename... Tags>
std::uint64_t derive_seed(std::uint64_t base, Tags... tags) {
  std::uint64_t h = mix64(base);
  ((h = seed_combine(h, static_cast<std::uint64_t>(tags))), ...);
  return h;
}

inline std::uint64_t bits_of(double x) {
  std::uint64_t u = 0;
  std::memcpy(&u, &x, sizeof(u));
  return u;
}

/// One draw of a circularly-symmetric complex Gaussian with unit variance
/// (variance 1/2 per real dimension).
inline std::complex<double> draw_cn(std::mt19937_64& rng,
                                    std::normal_distribution<double>& nd) {
  const double re = nd(rng);
  const double im = nd(rng);
  return {re * 0.7071067811865476, im * 0.7071067811865476};
}

}  // namespace cfm
