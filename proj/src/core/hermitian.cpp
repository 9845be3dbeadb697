#include "core/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace opconv {

namespace {

void require_same_dim(const HermitianMatrix& x, const HermitianMatrix& y,
                      const char* where) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(x.dim()) + " vs " +
                                std::to_string(y.dim()) + ")");
  }
}

void require_in_domain(const FunctionDescriptor& f, const RealVector& eigenvalues) {
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (!f.contains(eigenvalues(i))) {
      throw DomainError("eigenvalue " + std::to_string(eigenvalues(i)) +
                        " outside domain of " + f.name);
    }
  }
}

void require_in_interior(const FunctionDescriptor& f, const RealVector& eigenvalues) {
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (!f.interior_contains(eigenvalues(i))) {
      throw DomainError("eigenvalue " + std::to_string(eigenvalues(i)) +
                        " not in domain interior of " + f.name);
    }
  }
}

bool confluent(double x, double y) {
  return std::abs(x - y) <= kConfluenceTol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& entries) {
  if (entries.rows() < 1 || entries.rows() != entries.cols()) {
    throw std::invalid_argument("HermitianMatrix requires a square matrix of dim >= 1");
  }
  entries_ = 0.5 * (entries + entries.adjoint());
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return HermitianMatrix(ComplexMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& values) {
  return HermitianMatrix(values.cast<Complex>().asDiagonal());
}

HermitianMatrix HermitianMatrix::scalar(double value) {
  ComplexMatrix m(1, 1);
  m(0, 0) = value;
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::shifted(double s) const {
  return HermitianMatrix(entries_ + s * ComplexMatrix::Identity(dim(), dim()));
}

HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y, "operator+");
  return HermitianMatrix(x.entries() + y.entries());
}

HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y, "operator-");
  return HermitianMatrix(x.entries() - y.entries());
}

HermitianMatrix operator*(double s, const HermitianMatrix& x) {
  return HermitianMatrix(s * x.entries());
}

double max_asymmetry(const ComplexMatrix& m) {
  return (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
}

SpectralDecomposition spectral_decompose(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.entries());
  if (solver.info() != Eigen::Success) {
    throw NumericError("hermitian eigendecomposition did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const HermitianMatrix& h) {
  return spectral_decompose(h).eigenvalues(0);
}

PsdVerdict psd_certificate(const HermitianMatrix& gap, double tol_scale) {
  if (tol_scale < 0.0) throw std::invalid_argument("tol_scale must be >= 0");
  const auto sd = spectral_decompose(gap);
  PsdVerdict verdict;
  verdict.min_eigenvalue = sd.eigenvalues(0);
  verdict.gap_norm = sd.eigenvalues.cwiseAbs().maxCoeff();
  verdict.tolerance = tol_scale * (1.0 + verdict.gap_norm);
  verdict.is_psd = verdict.min_eigenvalue >= -verdict.tolerance;
  return verdict;
}

HermitianMatrix apply_function(const FunctionDescriptor& f, const HermitianMatrix& h) {
  const auto sd = spectral_decompose(h);
  require_in_domain(f, sd.eigenvalues);
  RealVector mapped(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
    mapped(i) = f.value(f.clamp_to_domain(sd.eigenvalues(i)));
  }
  return HermitianMatrix(sd.eigenvectors * mapped.cast<Complex>().asDiagonal() *
                         sd.eigenvectors.adjoint());
}

double first_divided_difference(const FunctionDescriptor& f, double x, double y) {
  if (!f.contains(x) || !f.contains(y)) {
    throw DomainError("divided difference argument outside domain of " + f.name);
  }
  if (confluent(x, y)) return f.deriv1(f.clamp_to_domain(0.5 * (x + y)));
  const double xc = f.clamp_to_domain(x);
  const double yc = f.clamp_to_domain(y);
  return (f.value(xc) - f.value(yc)) / (xc - yc);
}

double second_divided_difference(const FunctionDescriptor& f, double x, double y,
                                 double z) {
  // Symmetric in its arguments; sort so the widest spread is x..z.
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  if (confluent(x, z)) return 0.5 * f.deriv2((x + y + z) / 3.0);
  return (first_divided_difference(f, x, y) - first_divided_difference(f, y, z)) /
         (x - z);
}

HermitianMatrix frechet_derivative(const FunctionDescriptor& f,
                                   const HermitianMatrix& base,
                                   const HermitianMatrix& direction) {
  require_same_dim(base, direction, "frechet_derivative");
  const auto sd = spectral_decompose(base);
  require_in_interior(f, sd.eigenvalues);
  const ComplexMatrix tilted =
      sd.eigenvectors.adjoint() * direction.entries() * sd.eigenvectors;
  const int n = base.dim();
  ComplexMatrix scaled(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      scaled(i, j) =
          first_divided_difference(f, sd.eigenvalues(i), sd.eigenvalues(j)) *
          tilted(i, j);
    }
  }
  return HermitianMatrix(sd.eigenvectors * scaled * sd.eigenvectors.adjoint());
}

HermitianMatrix second_directional_derivative(const FunctionDescriptor& f,
                                              const HermitianMatrix& base,
                                              const HermitianMatrix& direction) {
  require_same_dim(base, direction, "second_directional_derivative");
  const auto sd = spectral_decompose(base);
  require_in_interior(f, sd.eigenvalues);
  const ComplexMatrix tilted =
      sd.eigenvectors.adjoint() * direction.entries() * sd.eigenvectors;
  const int n = base.dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k) {
        acc += second_divided_difference(f, sd.eigenvalues(i), sd.eigenvalues(k),
                                         sd.eigenvalues(j)) *
               tilted(i, k) * tilted(k, j);
      }
      out(i, j) = 2.0 * acc;
      out(j, i) = std::conj(out(i, j));
    }
  }
  return HermitianMatrix(sd.eigenvectors * out * sd.eigenvectors.adjoint());
}

HermitianMatrix spd_inverse(const HermitianMatrix& h) {
  const auto sd = spectral_decompose(h);
  if (sd.eigenvalues(0) <= kDomainFloor) {
    throw DomainError("matrix not positive definite above the domain floor (min eigenvalue " +
                      std::to_string(sd.eigenvalues(0)) + ")");
  }
  return HermitianMatrix(sd.eigenvectors *
                         sd.eigenvalues.cwiseInverse().cast<Complex>().asDiagonal() *
                         sd.eigenvectors.adjoint());
}

}  // namespace opconv
