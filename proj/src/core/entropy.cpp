#include "core/entropy.hpp"

#include "core/inequalities.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace opconv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const char* where) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
  }
}

DensityMatrix mix_states(const DensityMatrix& rho, const DensityMatrix& sigma,
                         double c) {
  return DensityMatrix(c * rho.matrix() + (1.0 - c) * sigma.matrix());
}

}  // namespace

DensityMatrix::DensityMatrix(HermitianMatrix m) : matrix_(std::move(m)) {
  const double lo = min_eigenvalue(matrix_);
  if (lo < -kDensityTol) {
    throw std::invalid_argument("density matrix not PSD (min eigenvalue " +
                                std::to_string(lo) + ")");
  }
  const double tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kDensityTol) {
    throw std::invalid_argument("density matrix trace " + std::to_string(tr) +
                                " differs from 1");
  }
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto sd = spectral_decompose(rho.matrix());
  double s = 0.0;
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
    const double p = sd.eigenvalues(i);
    if (p > 0.0) s -= p * std::log(p);
  }
  return std::max(0.0, s);
}

double quantum_relative_entropy(const DensityMatrix& rho,
                                const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "quantum_relative_entropy");
  const auto dr = spectral_decompose(rho.matrix());
  double tr_rho_log_rho = 0.0;
  for (Eigen::Index i = 0; i < dr.eigenvalues.size(); ++i) {
    const double p = dr.eigenvalues(i);
    if (p > kRhoSupportFloor) tr_rho_log_rho += p * std::log(p);
  }

  const auto ds = spectral_decompose(sigma.matrix());
  double tr_rho_log_sigma = 0.0;
  for (Eigen::Index j = 0; j < ds.eigenvalues.size(); ++j) {
    const auto column = ds.eigenvectors.col(j);
    const double weight = (column.adjoint() * rho.matrix().entries() * column)(0).real();
    const double m = ds.eigenvalues(j);
    if (m < kSigmaSupportFloor) {
      if (weight > kRhoSupportFloor) return kInf;
      continue;  // both below floor: contributes nothing
    }
    tr_rho_log_sigma += weight * std::log(m);
  }
  return tr_rho_log_rho - tr_rho_log_sigma;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "trace_distance");
  const auto sd = spectral_decompose(rho.matrix() - sigma.matrix());
  return sd.eigenvalues.cwiseAbs().sum();
}

double concavity_gap(const DensityMatrix& rho, const DensityMatrix& sigma,
                     double c) {
  require_same_dim(rho, sigma, "concavity_gap");
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::invalid_argument("mixing weight must lie in [0,1]");
  }
  return von_neumann_entropy(mix_states(rho, sigma, c)) -
         c * von_neumann_entropy(rho) - (1.0 - c) * von_neumann_entropy(sigma);
}

double corollary_gap(const DensityMatrix& rho, const DensityMatrix& sigma,
                     double c) {
  const double t = trace_distance(rho, sigma);
  return concavity_gap(rho, sigma, c) - 0.5 * c * (1.0 - c) * t * t;
}

double intermediate_bound_gap(const DensityMatrix& rho, const DensityMatrix& sigma,
                              double c) {
  require_same_dim(rho, sigma, "intermediate_bound_gap");
  if (!(c > 0.0 && c < 1.0) || std::abs(c - 0.5) <= kMidpointBand) {
    throw std::invalid_argument(
        "intermediate bound requires c in (0,1) outside the midpoint band");
  }
  const DensityMatrix swapped = mix_states(sigma, rho, c);
  const DensityMatrix mixed = mix_states(rho, sigma, c);
  const double factor = c * (1.0 - c) / ((1.0 - 2.0 * c) * (1.0 - 2.0 * c));
  return concavity_gap(rho, sigma, c) -
         factor * quantum_relative_entropy(swapped, mixed);
}

double pinsker_gap(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double d = quantum_relative_entropy(rho, sigma);
  if (std::isinf(d)) return kInf;
  const double t = trace_distance(rho, sigma);
  return d - 0.5 * t * t;
}

double fannes_delta(double delta, double eps, int d) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("delta must lie in (0, 1/2)");
  }
  if (!(eps >= 0.0 && eps <= 2.0)) {
    throw std::invalid_argument("eps must lie in [0, 2]");
  }
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  const double ed = eps * delta;
  if (!(ed < 1.0)) throw std::invalid_argument("eps * delta must stay below 1");
  const double log_d = std::log(static_cast<double>(d));
  const double entropic = ed > 0.0 ? ed * (log_d - std::log(ed)) : 0.0;
  return entropic + 2.0 * delta * log_d;
}

double continuity_check(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("delta must lie in (0, 1/2)");
  }
  const double eps = trace_distance(rho, sigma);
  const double envelope = fannes_delta(delta, eps, rho.dim());
  const double drift = std::abs(concavity_gap(rho, sigma, 0.5) -
                                concavity_gap(rho, sigma, 0.5 + delta));
  return envelope - drift;
}

}  // namespace opconv
