#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cqexp {

// splitmix64 finalizer, used to decorrelate stream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of an independent substream. Trial i of a suite seeded with `seed`
/// runs on stream_seed(seed, i), so results do not depend on the order in
/// which trials execute.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 0x6a09e667f3bcc909ULL));
}

// Deterministic sampler. mt19937_64 supplies the bits; the mappings to
// uniform/normal are spelled out rather than taken from <random>
// distributions, whose output sequences are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  /// Uniform on (0,1]; never returns zero, so log() is safe.
  double uniform01() {
    return static_cast<double>((u64() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  /// Standard normal via Box-Muller; two fresh draws per call, no cached state.
  double normal() {
    const double u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(kTwoPi * v);
  }

  /// Integer in [lo, hi], both inclusive.
  int uniform_int(int lo, int hi) {
    return lo +
           static_cast<int>(u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  static constexpr double kTwoPi = 6.28318530717958647692;
  std::mt19937_64 eng_;
};

}  // namespace cqexp
