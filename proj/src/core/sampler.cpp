#include "core/sampler.hpp"

#include <stdexcept>

#include "core/rng.hpp"

namespace opconv {

namespace {

ComplexMatrix ginibre(Prng& rng, int dim) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  return g;
}

}  // namespace

void validate(const SamplerConfig& cfg) {
  if (cfg.dim < 1) throw std::invalid_argument("sampler dim must be >= 1");
  if (!(cfg.eigen_floor > 0.0)) throw std::invalid_argument("eigen_floor must be > 0");
  if (!(cfg.scale > 0.0)) throw std::invalid_argument("scale must be > 0");
  if (cfg.eigen_floor > cfg.scale) {
    throw std::invalid_argument("eigen_floor must not exceed scale");
  }
}

HermitianMatrix random_hermitian(const SamplerConfig& cfg) {
  validate(cfg);
  Prng rng = Prng::stream(cfg.seed, static_cast<std::uint64_t>(cfg.dim));
  const ComplexMatrix g = ginibre(rng, cfg.dim);
  return HermitianMatrix(cfg.scale * 0.5 * (g + g.adjoint()));
}

HermitianMatrix random_positive_definite(const SamplerConfig& cfg) {
  validate(cfg);
  Prng rng = Prng::stream(cfg.seed, static_cast<std::uint64_t>(cfg.dim));
  const ComplexMatrix g = ginibre(rng, cfg.dim);
  const ComplexMatrix wishart =
      (cfg.scale * cfg.scale / cfg.dim) * (g * g.adjoint());
  return HermitianMatrix(wishart).shifted(cfg.eigen_floor);
}

DensityMatrix random_density(const SamplerConfig& cfg) {
  const HermitianMatrix pd = random_positive_definite(cfg);
  return DensityMatrix((1.0 / pd.trace()) * pd);
}

}  // namespace opconv
