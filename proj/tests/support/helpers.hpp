#pragma once

#include <Eigen/Dense>

#include "core/hermitian.hpp"
#include "core/rng.hpp"

namespace opconv::test {

inline ComplexMatrix mat2(Complex a00, Complex a01, Complex a10, Complex a11) {
  ComplexMatrix m(2, 2);
  m << a00, a01, a10, a11;
  return m;
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_diff(const HermitianMatrix& x, const HermitianMatrix& y) {
  return max_abs(x.entries() - y.entries());
}

// Haar-ish random unitary from the QR of a Ginibre draw.
inline ComplexMatrix random_unitary(Prng& rng, int dim) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

// x -> 1/x with exact derivatives; not a catalog entry (the catalog's
// resolvent family requires a strictly positive shift) but handy as an
// independent cross-check whose divided differences are known in closed form.
inline FunctionDescriptor inverse_function() {
  FunctionDescriptor f;
  f.name = "inverse";
  f.value = [](double x) { return 1.0 / x; };
  f.deriv1 = [](double x) { return -1.0 / (x * x); };
  f.deriv2 = [](double x) { return 2.0 / (x * x * x); };
  f.domain_min = 0.0;
  f.domain_min_inclusive = false;
  f.operator_convex = true;
  return f;
}

}  // namespace opconv::test
