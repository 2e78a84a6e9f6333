#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "liepca/matrix.hpp"

namespace liepca {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic stream derivation: the same (seed, counters...) always maps
/// to the same engine state, independent of call sites or threading. The seed
/// is diffused before each counter is folded in, so streams for nearby
/// (seed, counter) pairs stay unrelated.
inline std::uint64_t derive_seed(std::uint64_t seed) { return splitmix64(seed); }

template <typename... Rest>
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t head,
                                 Rest... rest) {
  return derive_seed(splitmix64(seed) + head, rest...);
}

/// Seeded generator with hand-rolled uniform/normal draws so that outputs are
/// bit-reproducible for a given build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  static Rng substream(std::uint64_t seed, std::uint64_t counter) {
    return Rng(derive_seed(seed, counter));
  }

  /// Uniform in [0, 1).
  double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Uniform integer in {0, ..., n-1}.
  int uniform_int(int n) {
    const int v = static_cast<int>(uniform01() * n);
    return v >= n ? n - 1 : v;
  }

  /// Standard normal via Box-Muller (no cached spare).
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  Vec gaussian_vector(int d) {
    Vec g(d);
    for (double& x : g) x = normal();
    return g;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace liepca
