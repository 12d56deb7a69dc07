#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace lmc {

using Rng = std::mt19937_64;

// splitmix64 finalizer
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a tuple of
// repetition indices, so results do not depend on execution order.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t base,
                                                  std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = mix64(base);
  for (const std::uint64_t k : keys) {
    h = mix64(h ^ mix64(k + 0x632be59bd9b4e019ULL));
  }
  return h;
}

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementation.
[[nodiscard]] inline double uniform_unit(Rng &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection sampling.
[[nodiscard]] inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

[[nodiscard]] inline bool coin_flip(Rng &rng) { return (rng() >> 63) != 0; }

// Fisher-Yates with uniform_below, so the permutation is identical across
// standard library implementations.
template <typename Container> void shuffle(Container &c, Rng &rng) {
  for (std::size_t i = c.size(); i > 1; --i) {
    const std::size_t j = uniform_below(rng, i);
    using std::swap;
    swap(c[i - 1], c[j]);
  }
}

} // namespace lmc
