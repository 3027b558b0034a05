#pragma once

#include "xconv/disks.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace xconv {
namespace detail {

// Unbiased uniform draw from [0, bound), reproducible across platforms
// (mt19937_64 output is standardized; std::uniform_int_distribution is not).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

/// Samples n distinct cells of a W x W grid and places unit disks at the
/// doubled coordinates (2a, 2b): axis neighbors touch at distance exactly 2,
/// diagonals stay clear at squared distance 8, so every sample is a valid
/// instance. Higher density packs the same n disks into a smaller grid,
/// which raises the tangency count. Deterministic in the seed.
inline DiskInstance generate_lattice_instance(std::uint64_t seed, std::size_t n,
                                              const Rational& density) {
  if (n < 1) throw std::invalid_argument("generate_lattice_instance: n must be positive");
  if (density.sign() <= 0 || density > 1)
    throw std::invalid_argument("generate_lattice_instance: density must be in (0, 1]");

  // Smallest W with W^2 * density >= n, i.e. W^2 * num >= n * den.
  const Int num = numerator(density), den = denominator(density);
  std::uint64_t w = 1;
  while (Int(w) * Int(w) * num < Int(n) * den) ++w;

  const std::uint64_t cells = w * w;
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates over the virtual array 0..cells-1.
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  std::vector<std::uint64_t> picked;
  picked.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t j = i + detail::uniform_below(rng, cells - i);
    const auto at = [&](std::uint64_t k) {
      const auto it = moved.find(k);
      return it == moved.end() ? k : it->second;
    };
    picked.push_back(at(j));
    moved[j] = at(i);
  }

  DiskInstance d;
  d.centers.reserve(n);
  for (const std::uint64_t cell : picked) {
    const std::uint64_t a = cell % w, b = cell / w;
    d.centers.push_back(Point2{Rational(2 * Int(a)), Rational(2 * Int(b))});
  }
  std::sort(d.centers.begin(), d.centers.end());
  return d;
}

}  // namespace xconv
