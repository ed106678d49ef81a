#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace modal_barrier {

// All randomness in this project flows from SplitMix64 (Steele, Lea &
// Flood; the java.util.SplittableRandom finalizer) so that every run is
// reproducible from a single 64-bit seed across platforms. Seed 0 is valid.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// SplitMix64 output function applied to a raw state value.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic seed for sub-stream `index` of `base` (run seeds, shuffle
/// streams, ...): two rounds of the mixer keyed by the stream index.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64_mix(splitmix64_mix(base) + (index + 1) * kGolden);
}

/// Stateless draw addressed by (seed, a, b) — used for common-random-number
/// sampling where a trial must depend only on its coordinates, never on the
/// order in which other trials were evaluated.
inline std::uint64_t mix3(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix64_mix(splitmix64_mix(seed + a * kGolden) + b * kGolden);
}

/// Map 64 random bits to [0, 1) with 53-bit resolution.
inline double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGolden;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) via rejection sampling (unbiased).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound == 0 ? 0 : ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % bound;
  }

  double next_unit() { return unit_double(next()); }

 private:
  std::uint64_t state_;
};

/// Fisher–Yates permutation of {0, ..., m-1}; uniform over permutations.
inline std::vector<int> random_permutation(int m, std::uint64_t seed) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 rng(seed);
  for (int k = m - 1; k >= 1; --k) {
    const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k) + 1));
    std::swap(perm[k], perm[j]);
  }
  return perm;
}

}  // namespace modal_barrier
