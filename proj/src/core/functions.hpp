#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace opconv {

// Eigenvalues closer than this to an excluded domain endpoint are rejected.
inline constexpr double kDomainFloor = 1e-12;

// Hiai canonical form of an operator convex function on [0,inf):
//   f(x) = f(0) + a*x + b*x^2 + int_0^inf (x/(1+l) - 1 + l/(x+l)) dmu(l).
// Only measures with a Lebesgue density are representable here; the zero
// measure is encoded by a null density.
struct RepresentationData {
  double f_at_zero = 0.0;
  double a = 0.0;
  double b = 0.0;  // >= 0
  std::function<double(double)> measure_density;  // density of mu; null = zero measure
};

// A scalar function together with its first two derivatives and the
// metadata the matrix calculus needs: domain lower endpoint (inclusive
// endpoints are evaluated by their limit value, exclusive ones are
// rejected below the domain floor) and whether the function is operator
// convex on its domain.
struct FunctionDescriptor {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> deriv1;
  std::function<double(double)> deriv2;
  double domain_min = 0.0;  // -infinity means unrestricted
  bool domain_min_inclusive = false;
  bool operator_convex = false;
  std::optional<RepresentationData> representation;

  // x acceptable for value-level evaluation.
  bool contains(double x) const {
    if (domain_min == -std::numeric_limits<double>::infinity()) return true;
    return domain_min_inclusive ? x >= domain_min - kDomainFloor
                                : x >= domain_min + kDomainFloor;
  }

  // x strictly inside the domain; required wherever derivatives enter.
  bool interior_contains(double x) const {
    if (domain_min == -std::numeric_limits<double>::infinity()) return true;
    return x >= domain_min + kDomainFloor;
  }

  // Snap boundary round-off onto an inclusive endpoint.
  double clamp_to_domain(double x) const {
    if (domain_min_inclusive && x < domain_min) return domain_min;
    return x;
  }
};

// Builds a catalog entry. Known names: square, xlogx, neglog, resolvent
// (one parameter s > 0), one_plus_x_log, g_counter. Throws
// std::invalid_argument for unknown names or bad parameters.
FunctionDescriptor catalog(const std::string& name,
                           const std::vector<double>& params = {});

// Parses a CLI token such as "xlogx" or "resolvent:0.5".
FunctionDescriptor catalog_parse(const std::string& token);

// The operator convex entries driven by default in verification suites.
const std::vector<std::string>& default_verify_functions();

// Gauss-Legendre nodes/weights on [0,1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre_unit(int n);

inline constexpr int kDefaultQuadratureNodes = 256;

// Forward evaluation of the canonical form at x >= 0. The integral over
// [0,inf) is mapped to [0,1) by l = t/(1-t) and evaluated with
// Gauss-Legendre quadrature.
double evaluate_via_representation(const RepresentationData& rep, double x,
                                   int nodes = kDefaultQuadratureNodes);

// int 1/(1+l)^2 dmu(l), the integrability moment of the measure.
double representation_measure_moment(const RepresentationData& rep,
                                     int nodes = kDefaultQuadratureNodes);

}  // namespace opconv
