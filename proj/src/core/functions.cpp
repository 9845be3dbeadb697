#include "core/functions.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "core/errors.hpp"

namespace opconv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_parameter(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", s);
  return buf;
}

FunctionDescriptor make_square() {
  FunctionDescriptor f;
  f.name = "square";
  f.value = [](double x) { return x * x; };
  f.deriv1 = [](double x) { return 2.0 * x; };
  f.deriv2 = [](double) { return 2.0; };
  f.domain_min = -kInf;
  f.domain_min_inclusive = true;
  f.operator_convex = true;
  f.representation = RepresentationData{0.0, 0.0, 1.0, nullptr};
  return f;
}

FunctionDescriptor make_xlogx() {
  FunctionDescriptor f;
  f.name = "xlogx";
  f.value = [](double x) { return x <= 0.0 ? 0.0 : x * std::log(x); };
  f.deriv1 = [](double x) { return std::log(x) + 1.0; };
  f.deriv2 = [](double x) { return 1.0 / x; };
  f.domain_min = 0.0;
  f.domain_min_inclusive = true;
  f.operator_convex = true;
  // x log x = int_0^inf (x/(1+l) - 1 + l/(x+l)) dl: the measure is Lebesgue.
  f.representation = RepresentationData{0.0, 0.0, 0.0, [](double) { return 1.0; }};
  return f;
}

FunctionDescriptor make_neglog() {
  FunctionDescriptor f;
  f.name = "neglog";
  f.value = [](double x) { return -std::log(x); };
  f.deriv1 = [](double x) { return -1.0 / x; };
  f.deriv2 = [](double x) { return 1.0 / (x * x); };
  f.domain_min = 0.0;
  f.domain_min_inclusive = false;
  f.operator_convex = true;
  return f;
}

FunctionDescriptor make_resolvent(double s) {
  if (!(s > 0.0)) {
    throw std::invalid_argument("resolvent shift must be positive, got " +
                                format_parameter(s));
  }
  FunctionDescriptor f;
  f.name = "resolvent:" + format_parameter(s);
  f.value = [s](double x) { return 1.0 / (s + x); };
  f.deriv1 = [s](double x) {
    const double r = s + x;
    return -1.0 / (r * r);
  };
  f.deriv2 = [s](double x) {
    const double r = s + x;
    return 2.0 / (r * r * r);
  };
  f.domain_min = -s;
  f.domain_min_inclusive = false;
  f.operator_convex = true;
  return f;
}

FunctionDescriptor make_one_plus_x_log() {
  FunctionDescriptor f;
  f.name = "one_plus_x_log";
  f.value = [](double x) { return (1.0 + x) * std::log1p(x); };
  f.deriv1 = [](double x) { return std::log1p(x) + 1.0; };
  f.deriv2 = [](double x) { return 1.0 / (1.0 + x); };
  f.domain_min = -1.0;
  f.domain_min_inclusive = false;
  f.operator_convex = true;
  return f;
}

FunctionDescriptor make_g_counter() {
  // g(x) = x^2/2 - (1+x)log(1+x): convex on [0,inf) but not operator convex.
  FunctionDescriptor f;
  f.name = "g_counter";
  f.value = [](double x) { return 0.5 * x * x - (1.0 + x) * std::log1p(x); };
  f.deriv1 = [](double x) { return x - std::log1p(x) - 1.0; };
  f.deriv2 = [](double x) { return x / (1.0 + x); };
  f.domain_min = 0.0;
  f.domain_min_inclusive = true;
  f.operator_convex = false;
  return f;
}

}  // namespace

FunctionDescriptor catalog(const std::string& name,
                           const std::vector<double>& params) {
  if (name == "square") return make_square();
  if (name == "xlogx") return make_xlogx();
  if (name == "neglog") return make_neglog();
  if (name == "resolvent") {
    if (params.size() != 1) {
      throw std::invalid_argument("resolvent requires exactly one shift parameter");
    }
    return make_resolvent(params[0]);
  }
  if (name == "one_plus_x_log") return make_one_plus_x_log();
  if (name == "g_counter") return make_g_counter();
  throw std::invalid_argument("unknown function name: " + name);
}

FunctionDescriptor catalog_parse(const std::string& token) {
  const auto colon = token.find(':');
  if (colon == std::string::npos) return catalog(token);
  const std::string name = token.substr(0, colon);
  const std::string arg = token.substr(colon + 1);
  std::size_t used = 0;
  double s = 0.0;
  try {
    s = std::stod(arg, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad parameter in function token: " + token);
  }
  if (used != arg.size()) {
    throw std::invalid_argument("bad parameter in function token: " + token);
  }
  return catalog(name, {s});
}

const std::vector<std::string>& default_verify_functions() {
  static const std::vector<std::string> names = {
      "xlogx", "neglog", "resolvent:0.5", "resolvent:1", "resolvent:5",
      "one_plus_x_log"};
  return names;
}

QuadratureRule gauss_legendre_unit(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  constexpr double kPi = 3.14159265358979323846;
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Chebyshev initial guess.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    // Map [-1,1] -> [0,1]; z descends, so the front of the array gets -z.
    rule.nodes[i] = 0.5 * (1.0 - z);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + z);
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

double evaluate_via_representation(const RepresentationData& rep, double x,
                                   int nodes) {
  if (x < 0.0) throw DomainError("representation evaluation requires x >= 0");
  if (nodes < 16) throw std::invalid_argument("representation quadrature needs >= 16 nodes");
  double result = rep.f_at_zero + rep.a * x + rep.b * x * x;
  if (rep.measure_density) {
    // With l = t/(1-t) the kernel (x/(1+l) - 1 + l/(x+l)) dl/dt collapses to
    // x(x-1)/(x + t(1-x)), which avoids the cancellation of the raw form at
    // large l.
    const QuadratureRule rule = gauss_legendre_unit(nodes);
    double integral = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double t = rule.nodes[i];
      const double lambda = t / (1.0 - t);
      const double kernel = x * (x - 1.0) / (x + t * (1.0 - x));
      integral += rule.weights[i] * kernel * rep.measure_density(lambda);
    }
    result += integral;
  }
  return result;
}

double representation_measure_moment(const RepresentationData& rep, int nodes) {
  if (nodes < 16) throw std::invalid_argument("representation quadrature needs >= 16 nodes");
  if (!rep.measure_density) return 0.0;
  // 1/(1+l)^2 dl/dt = 1, so the moment is the plain average of the density.
  const QuadratureRule rule = gauss_legendre_unit(nodes);
  double moment = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double t = rule.nodes[i];
    moment += rule.weights[i] * rep.measure_density(t / (1.0 - t));
  }
  return moment;
}

}  // namespace opconv
