#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace opconv {

// Counter-splittable PRNG (splitmix64 core with a Box-Muller Gaussian on
// top). std::normal_distribution is implementation-defined, so sampling is
// hand-rolled to keep seeded runs byte-identical across toolchains. Streams
// derived from (seed, index) are independent, which makes per-trial draws a
// pure function of the master seed and the trial counter.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Stream derivation: independent generator for (seed, index).
  static Prng stream(std::uint64_t seed, std::uint64_t index) {
    return Prng(mix(seed + 0x9e3779b97f4a7c15ull * (index + 1)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform on [0,1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe as a log argument.
  double uniform_positive() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (cosine branch only).
  double gaussian() {
    const double u1 = uniform_positive();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  // Complex Gaussian with E|z|^2 = 1.
  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re * kInvSqrt2, im * kInvSqrt2};
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  static constexpr double kInvSqrt2 = 0.70710678118654752440;
  std::uint64_t state_;
};

// Sub-seed for trial `index` of a run seeded with `seed`.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  return Prng::mix(seed + 0x9e3779b97f4a7c15ull * (index + 1));
}

}  // namespace opconv
