#pragma once

#include <cstdint>

#include "core/entropy.hpp"
#include "core/hermitian.hpp"

namespace opconv {

// Seeded generation parameters. Draws are pure functions of (seed, dim).
struct SamplerConfig {
  std::uint64_t seed = 0;
  int dim = 2;
  double eigen_floor = 0.05;
  double scale = 1.0;
};

void validate(const SamplerConfig& cfg);

// scale * (G + G^dagger)/2 from a standard complex Gaussian G.
HermitianMatrix random_hermitian(const SamplerConfig& cfg);

// (scale^2/dim) G G^dagger + eigen_floor I; min eigenvalue >= eigen_floor.
HermitianMatrix random_positive_definite(const SamplerConfig& cfg);

// random_positive_definite normalized to unit trace.
DensityMatrix random_density(const SamplerConfig& cfg);

}  // namespace opconv
