#pragma once

#include <Eigen/Dense>
#include <complex>

#include "core/errors.hpp"
#include "core/functions.hpp"

namespace opconv {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// |x - y| below this (relative) switches divided differences to the
// derivative form; balances cancellation against derivative error.
inline constexpr double kConfluenceTol = 1e-7;

// Dense complex Hermitian matrix. Construction symmetrizes the input by
// averaging with its conjugate transpose, so file round-off is absorbed and
// the stored entries satisfy entries(i,j) == conj(entries(j,i)) exactly.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& entries);

  static HermitianMatrix identity(int dim);
  static HermitianMatrix zero(int dim);
  static HermitianMatrix diagonal(const RealVector& values);
  static HermitianMatrix scalar(double value);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const ComplexMatrix& entries() const { return entries_; }

  double trace() const { return entries_.trace().real(); }
  double max_abs_entry() const { return entries_.cwiseAbs().maxCoeff(); }

  // H + s*I.
  HermitianMatrix shifted(double s) const;

 private:
  ComplexMatrix entries_;
};

HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y);
HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y);
HermitianMatrix operator*(double s, const HermitianMatrix& x);

// Largest absolute deviation from conjugate symmetry of a raw matrix.
double max_asymmetry(const ComplexMatrix& m);

// Eigenvalues ascending; eigenvector columns form a unitary matrix with
// column i belonging to eigenvalues[i].
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

SpectralDecomposition spectral_decompose(const HermitianMatrix& h);

// Minimum-eigenvalue certificate that a gap matrix is PSD within tolerance.
struct PsdVerdict {
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  bool is_psd = false;
  double gap_norm = 0.0;  // largest |eigenvalue| of the certified matrix
};

double min_eigenvalue(const HermitianMatrix& h);
PsdVerdict psd_certificate(const HermitianMatrix& gap, double tol_scale);

// U diag(f(lambda)) U^dagger. Eigenvalues outside f's domain raise
// DomainError naming the offending eigenvalue; inclusive boundary values
// evaluate the limit value there.
HermitianMatrix apply_function(const FunctionDescriptor& f, const HermitianMatrix& h);

// f^[1](x,y) = (f(x)-f(y))/(x-y), confluent limit f'((x+y)/2).
double first_divided_difference(const FunctionDescriptor& f, double x, double y);

// f^[2](x,y,z), symmetric, with confluent limit f''/2.
double second_divided_difference(const FunctionDescriptor& f, double x, double y, double z);

// Daleckii-Krein: d/dt f(base + t * direction) at t = 0. In base's
// eigenbasis the entries are f^[1](lambda_i, lambda_j) * direction~(i,j).
HermitianMatrix frechet_derivative(const FunctionDescriptor& f,
                                   const HermitianMatrix& base,
                                   const HermitianMatrix& direction);

// d^2/dt^2 f(base + t * direction) at t = 0; entry (i,j) in the eigenbasis
// is 2 sum_k f^[2](lambda_i, lambda_k, lambda_j) D~(i,k) D~(k,j). PSD for
// operator convex f.
HermitianMatrix second_directional_derivative(const FunctionDescriptor& f,
                                              const HermitianMatrix& base,
                                              const HermitianMatrix& direction);

// Inverse of a positive definite matrix through its spectral decomposition;
// keeps the result exactly Hermitian. Throws DomainError when the smallest
// eigenvalue is at or below the domain floor.
HermitianMatrix spd_inverse(const HermitianMatrix& h);

}  // namespace opconv
