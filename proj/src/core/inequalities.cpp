#include "core/inequalities.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace opconv {

namespace {

void require_positive_definite(const HermitianMatrix& m, const char* label) {
  const double lo = min_eigenvalue(m);
  if (lo <= kDomainFloor) {
    throw DomainError(std::string(label) +
                      " must be positive definite above the domain floor "
                      "(min eigenvalue " +
                      std::to_string(lo) + ")");
  }
}

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b,
                      const char* where) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
  }
}

}  // namespace

ConvexityInstance::ConvexityInstance(HermitianMatrix a_in, HermitianMatrix b_in,
                                     double c_in, FunctionDescriptor f_in)
    : a(std::move(a_in)), b(std::move(b_in)), c(c_in), f(std::move(f_in)) {
  require_same_dim(a, b, "ConvexityInstance");
  if (!(c > 0.0 && c < 1.0)) {
    throw std::invalid_argument("mixing weight must lie strictly inside (0,1)");
  }
  require_positive_definite(a, "A");
  require_positive_definite(b, "B");
}

MixtureOperator mixture(const ConvexityInstance& inst, double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw std::invalid_argument("mixture weight must lie in [0,1]");
  }
  return MixtureOperator{weight * inst.a + (1.0 - weight) * inst.b};
}

HermitianMatrix modulus_of_convexity(const ConvexityInstance& inst) {
  const HermitianMatrix mixed = mixture(inst, inst.c).value;
  return inst.c * apply_function(inst.f, inst.a) +
         (1.0 - inst.c) * apply_function(inst.f, inst.b) -
         apply_function(inst.f, mixed);
}

HermitianMatrix bregman_divergence(const FunctionDescriptor& f,
                                   const HermitianMatrix& a,
                                   const HermitianMatrix& b) {
  require_same_dim(a, b, "bregman_divergence");
  return apply_function(f, a) - apply_function(f, b) -
         frechet_derivative(f, b, a - b);
}

HermitianMatrix bregman_resolvent_closed_form(double s, const HermitianMatrix& a,
                                              const HermitianMatrix& b) {
  if (!(s > 0.0)) throw std::invalid_argument("resolvent shift must be positive");
  require_same_dim(a, b, "bregman_resolvent_closed_form");
  require_positive_definite(a, "A");
  require_positive_definite(b, "B");
  const ComplexMatrix rb = spd_inverse(b.shifted(s)).entries();
  const ComplexMatrix ra = spd_inverse(a.shifted(s)).entries();
  const ComplexMatrix d = a.entries() - b.entries();
  return HermitianMatrix(rb * d * ra * d * rb);
}

HermitianMatrix theorem1_rhs(const ConvexityInstance& inst) {
  const double c = inst.c;
  if (std::abs(c - 0.5) > kMidpointBand) {
    const HermitianMatrix m_far = mixture(inst, 1.0 - c).value;
    const HermitianMatrix m_near = mixture(inst, c).value;
    const double factor = c * (1.0 - c) / ((1.0 - 2.0 * c) * (1.0 - 2.0 * c));
    return factor * bregman_divergence(inst.f, m_far, m_near);
  }
  const HermitianMatrix midpoint = mixture(inst, 0.5).value;
  return 0.125 * second_directional_derivative(inst.f, midpoint, inst.a - inst.b);
}

HermitianMatrix theorem1_gap(const ConvexityInstance& inst) {
  return modulus_of_convexity(inst) - theorem1_rhs(inst);
}

HermitianMatrix strengthened_ah_gap(const HermitianMatrix& a,
                                    const HermitianMatrix& b) {
  require_same_dim(a, b, "strengthened_ah_gap");
  require_positive_definite(a, "A");
  require_positive_definite(b, "B");
  const HermitianMatrix inv_a = spd_inverse(a);
  const HermitianMatrix inv_b = spd_inverse(b);
  const HermitianMatrix inv_sum = spd_inverse(a + b);
  const ComplexMatrix d = a.entries() - b.entries();
  const ComplexMatrix cubic =
      inv_sum.entries() * d * inv_sum.entries() * d * inv_sum.entries();
  return 0.5 * (inv_a + inv_b) - 2.0 * inv_sum - HermitianMatrix(2.0 * cubic);
}

DilationOperators build_dilation(const HermitianMatrix& a, const HermitianMatrix& b,
                                 double c) {
  require_same_dim(a, b, "build_dilation");
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::invalid_argument("dilation weight must lie in [0,1]");
  }
  const int n = a.dim();
  const double root_c = std::sqrt(c);
  const double root_1c = std::sqrt(1.0 - c);
  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);

  ComplexMatrix w = ComplexMatrix::Zero(2 * n, 2 * n);
  w.topLeftCorner(n, n) = root_c * eye;
  w.topRightCorner(n, n) = -root_1c * eye;
  w.bottomLeftCorner(n, n) = root_1c * eye;
  w.bottomRightCorner(n, n) = root_c * eye;

  ComplexMatrix t = ComplexMatrix::Zero(2 * n, 2 * n);
  t.topLeftCorner(n, n) = a.entries();
  t.bottomRightCorner(n, n) = b.entries();

  DilationOperators ops{
      w,
      HermitianMatrix(t),
      HermitianMatrix(w * t * w.adjoint()),
      HermitianMatrix(w.adjoint() * t * w),
  };
  return ops;
}

PsdVerdict midpoint_from_dilation_check(const HermitianMatrix& a,
                                        const HermitianMatrix& b, double c,
                                        const FunctionDescriptor& f,
                                        double tol_scale) {
  if (!(c > 0.0 && c < 1.0)) {
    throw std::invalid_argument("dilation check weight must lie strictly inside (0,1)");
  }
  const auto ops = build_dilation(a, b, c);
  const HermitianMatrix mid = 0.5 * (ops.t1 + ops.t2);
  const HermitianMatrix diff = ops.t1 - ops.t2;
  const HermitianMatrix rhs_dilated =
      0.125 * second_directional_derivative(f, mid, diff);
  const int n = a.dim();
  const HermitianMatrix rhs_block =
      HermitianMatrix(rhs_dilated.entries().topLeftCorner(n, n));
  const HermitianMatrix modulus =
      modulus_of_convexity(ConvexityInstance(a, b, c, f));
  return psd_certificate(modulus - rhs_block, tol_scale);
}

PsdVerdict midpoint_from_dilation_check(const HermitianMatrix& a,
                                        const HermitianMatrix& b, double c) {
  return midpoint_from_dilation_check(a, b, c, catalog("resolvent", {1.0}));
}

}  // namespace opconv
