#pragma once

#include <cstdint>
#include <random>

#include "birkhoff/fp.hpp"
#include "birkhoff/matrix.hpp"
#include "birkhoff/rational.hpp"

namespace birkhoff {

/// mt19937_64 is fully pinned by the standard, so seeded streams are
/// reproducible across platforms; std::uniform_int_distribution is not, hence
/// the hand-rolled rejection sampler below.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Deterministic per-task seed derivation (splitmix64 over a keyed sum).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xc2b2ae3d27d4eb4fULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <class K>
K random_scalar(Rng& rng);

template <>
inline Fp random_scalar<Fp>(Rng& rng) {
  return Fp::from_uint(uniform_below(rng, Fp::modulus()));
}

/// Integer coefficients from a window wide enough that a random combination
/// misses any fixed hypersurface (e.g. a determinant locus) with probability
/// well under 2^-15 per draw.
template <>
inline Rational random_scalar<Rational>(Rng& rng) {
  return Rational(static_cast<long>(uniform_below(rng, (1L << 21) + 1)) - (1L << 20));
}

template <class K>
Matrix<K> random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix<K> a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_scalar<K>(rng);
  return a;
}

template <class K>
Matrix<K> random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix<K> g = random_matrix<K>(rng, n, n);
    if (rank(g) == n) return g;
  }
}

}  // namespace birkhoff
