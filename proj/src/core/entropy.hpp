#pragma once

#include "core/hermitian.hpp"

namespace opconv {

// Validation slack for quantum states: PSD and unit trace within this.
inline constexpr double kDensityTol = 1e-10;
// Support floors of the relative entropy: sigma weight below the first with
// rho weight above the second diverges; below both, the term contributes 0.
inline constexpr double kSigmaSupportFloor = 1e-14;
inline constexpr double kRhoSupportFloor = 1e-12;

// PSD Hermitian matrix of unit trace.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianMatrix m);

  const HermitianMatrix& matrix() const { return matrix_; }
  int dim() const { return matrix_.dim(); }

 private:
  HermitianMatrix matrix_;
};

// -tr(rho log rho) in nats, with 0 log 0 = 0. In [0, log dim].
double von_neumann_entropy(const DensityMatrix& rho);

// tr(rho log rho) - tr(rho log sigma), evaluated in sigma's eigenbasis;
// +infinity when rho has weight outside sigma's support.
double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// ||rho - sigma||_1, the sum of absolute eigenvalues of the difference.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// S(c) = S(c rho + (1-c) sigma) - c S(rho) - (1-c) S(sigma) >= 0.
double concavity_gap(const DensityMatrix& rho, const DensityMatrix& sigma, double c);

// S(c) - (1/2) c(1-c) ||rho - sigma||_1^2, the sharpened concavity margin.
double corollary_gap(const DensityMatrix& rho, const DensityMatrix& sigma, double c);

// S(c) - c(1-c)/(1-2c)^2 * D(c sigma + (1-c) rho || c rho + (1-c) sigma);
// defined away from the midpoint band only.
double intermediate_bound_gap(const DensityMatrix& rho, const DensityMatrix& sigma,
                              double c);

// D(rho || sigma) - (1/2) ||rho - sigma||_1^2 >= 0 (+infinity allowed).
double pinsker_gap(const DensityMatrix& rho, const DensityMatrix& sigma);

// Continuity envelope Delta(delta, eps, d) = eps*delta*(log d - log(eps*delta))
//                                            + 2*delta*log d.
double fannes_delta(double delta, double eps, int d);

// Delta(delta, ||rho-sigma||_1, dim) - |S(1/2) - S(1/2 + delta)| >= 0.
double continuity_check(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double delta);

}  // namespace opconv
