#include "opconv/opconv.h"

#include <cstring>
#include <new>
#include <string>
#include <tuple>

#include "core/driver.hpp"
#include "core/entropy.hpp"
#include "core/inequalities.hpp"
#include "core/miner.hpp"
#include "core/version.hpp"

struct opconv_matrix {
  opconv::HermitianMatrix value;
};

struct opconv_function {
  opconv::FunctionDescriptor value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Runs `body`, translating exceptions into status codes.
template <typename Body>
opconv_status guarded(Body&& body) {
  try {
    return body();
  } catch (const opconv::DomainError& e) {
    set_error(e.what());
    return OPCONV_ERR_DOMAIN;
  } catch (const opconv::ParseError& e) {
    set_error(e.what());
    return OPCONV_ERR_PARSE;
  } catch (const opconv::NumericError& e) {
    set_error(e.what());
    return OPCONV_ERR_NUMERIC;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return OPCONV_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return OPCONV_ERR_NUMERIC;
  } catch (const std::exception& e) {
    set_error(e.what());
    return OPCONV_ERR_NUMERIC;
  }
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

opconv_status require(bool non_null, const char* what) {
  if (non_null) return OPCONV_OK;
  set_error(std::string("null argument: ") + what);
  return OPCONV_ERR_NULL_ARGUMENT;
}

opconv_status make_matrix(opconv::HermitianMatrix m, opconv_matrix** out) {
  *out = new opconv_matrix{std::move(m)};
  return OPCONV_OK;
}

opconv::MinerOptions build_miner_options(const opconv_mine_options& options) {
  opconv::MinerOptions opts;
  opts.seed = options.seed;
  if (options.trials > 0) opts.trials = options.trials;
  if (options.dims != nullptr) {
    const auto [lo, hi] = opconv::parse_dim_range(options.dims);
    opts.dims.clear();
    for (int d = lo; d <= hi; ++d) opts.dims.push_back(d);
  }
  if (options.c_values != nullptr) {
    opts.c_grid = opconv::parse_double_list(options.c_values);
  }
  return opts;
}

}  // namespace

extern "C" {

const char* opconv_version(void) { return opconv::kVersion; }

const char* opconv_last_error(void) { return g_last_error.c_str(); }

void opconv_string_free(char* text) { delete[] text; }

opconv_status opconv_matrix_create(int dim, const double* real_rowmajor,
                                   const double* imag_rowmajor,
                                   opconv_matrix** out) {
  if (auto s = require(real_rowmajor && out, "opconv_matrix_create")) return s;
  return guarded([&] {
    if (dim < 1) throw std::invalid_argument("matrix dim must be >= 1");
    opconv::ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        const double re = real_rowmajor[i * dim + j];
        const double im = imag_rowmajor ? imag_rowmajor[i * dim + j] : 0.0;
        m(i, j) = opconv::Complex(re, im);
      }
    }
    if (opconv::max_asymmetry(m) > opconv::kParseRejectAsymmetry) {
      throw std::invalid_argument("matrix asymmetry exceeds the hard limit");
    }
    return make_matrix(opconv::HermitianMatrix(m), out);
  });
}

opconv_status opconv_matrix_parse(const char* json_text, opconv_matrix** out,
                                  double* max_asymmetry) {
  if (auto s = require(json_text && out, "opconv_matrix_parse")) return s;
  return guarded([&] {
    return make_matrix(opconv::parse_matrix(json_text, max_asymmetry), out);
  });
}

opconv_status opconv_matrix_serialize(const opconv_matrix* m, char** json_out) {
  if (auto s = require(m && json_out, "opconv_matrix_serialize")) return s;
  return guarded([&] {
    *json_out = copy_string(opconv::serialize_matrix(m->value));
    return OPCONV_OK;
  });
}

void opconv_matrix_free(opconv_matrix* m) { delete m; }

int opconv_matrix_dim(const opconv_matrix* m) { return m ? m->value.dim() : 0; }

opconv_status opconv_matrix_entry(const opconv_matrix* m, int row, int col,
                                  double* re, double* im) {
  if (auto s = require(m && re && im, "opconv_matrix_entry")) return s;
  return guarded([&] {
    if (row < 0 || col < 0 || row >= m->value.dim() || col >= m->value.dim()) {
      throw std::invalid_argument("matrix index out of range");
    }
    const auto entry = m->value.entries()(row, col);
    *re = entry.real();
    *im = entry.imag();
    return OPCONV_OK;
  });
}

opconv_status opconv_matrix_min_eigenvalue(const opconv_matrix* m, double* out) {
  if (auto s = require(m && out, "opconv_matrix_min_eigenvalue")) return s;
  return guarded([&] {
    *out = opconv::min_eigenvalue(m->value);
    return OPCONV_OK;
  });
}

opconv_status opconv_matrix_psd_certificate(const opconv_matrix* m, double tol_scale,
                                            opconv_psd_verdict* out) {
  if (auto s = require(m && out, "opconv_matrix_psd_certificate")) return s;
  return guarded([&] {
    const auto verdict = opconv::psd_certificate(m->value, tol_scale);
    out->min_eigenvalue = verdict.min_eigenvalue;
    out->tolerance = verdict.tolerance;
    out->is_psd = verdict.is_psd ? 1 : 0;
    out->gap_norm = verdict.gap_norm;
    return OPCONV_OK;
  });
}

opconv_status opconv_matrix_is_density(const opconv_matrix* m) {
  if (auto s = require(m != nullptr, "opconv_matrix_is_density")) return s;
  return guarded([&] {
    opconv::DensityMatrix probe(m->value);
    (void)probe;
    return OPCONV_OK;
  });
}

opconv_status opconv_function_lookup(const char* token, opconv_function** out) {
  if (auto s = require(token && out, "opconv_function_lookup")) return s;
  const opconv_status status = guarded([&] {
    *out = new opconv_function{opconv::catalog_parse(token)};
    return OPCONV_OK;
  });
  if (status == OPCONV_ERR_INVALID_ARGUMENT &&
      g_last_error.rfind("unknown function", 0) == 0) {
    return OPCONV_ERR_UNKNOWN_FUNCTION;
  }
  return status;
}

void opconv_function_free(opconv_function* f) { delete f; }

int opconv_function_is_operator_convex(const opconv_function* f) {
  return f && f->value.operator_convex ? 1 : 0;
}

opconv_status opconv_function_value(const opconv_function* f, double x, double* out) {
  if (auto s = require(f && out, "opconv_function_value")) return s;
  return guarded([&] {
    if (!f->value.contains(x)) {
      throw opconv::DomainError("argument outside domain of " + f->value.name);
    }
    *out = f->value.value(f->value.clamp_to_domain(x));
    return OPCONV_OK;
  });
}

opconv_status opconv_apply_function(const opconv_function* f, const opconv_matrix* h,
                                    opconv_matrix** out) {
  if (auto s = require(f && h && out, "opconv_apply_function")) return s;
  return guarded(
      [&] { return make_matrix(opconv::apply_function(f->value, h->value), out); });
}

opconv_status opconv_bregman_divergence(const opconv_function* f,
                                        const opconv_matrix* a,
                                        const opconv_matrix* b,
                                        opconv_matrix** out) {
  if (auto s = require(f && a && b && out, "opconv_bregman_divergence")) return s;
  return guarded([&] {
    return make_matrix(opconv::bregman_divergence(f->value, a->value, b->value), out);
  });
}

opconv_status opconv_modulus_of_convexity(const opconv_function* f,
                                          const opconv_matrix* a,
                                          const opconv_matrix* b, double c,
                                          opconv_matrix** out) {
  if (auto s = require(f && a && b && out, "opconv_modulus_of_convexity")) return s;
  return guarded([&] {
    const opconv::ConvexityInstance inst(a->value, b->value, c, f->value);
    return make_matrix(opconv::modulus_of_convexity(inst), out);
  });
}

opconv_status opconv_lower_bound_rhs(const opconv_function* f, const opconv_matrix* a,
                                     const opconv_matrix* b, double c,
                                     opconv_matrix** out) {
  if (auto s = require(f && a && b && out, "opconv_lower_bound_rhs")) return s;
  return guarded([&] {
    const opconv::ConvexityInstance inst(a->value, b->value, c, f->value);
    return make_matrix(opconv::theorem1_rhs(inst), out);
  });
}

opconv_status opconv_lower_bound_gap(const opconv_function* f, const opconv_matrix* a,
                                     const opconv_matrix* b, double c,
                                     opconv_matrix** out) {
  if (auto s = require(f && a && b && out, "opconv_lower_bound_gap")) return s;
  return guarded([&] {
    const opconv::ConvexityInstance inst(a->value, b->value, c, f->value);
    return make_matrix(opconv::theorem1_gap(inst), out);
  });
}

opconv_status opconv_strengthened_ah_gap(const opconv_matrix* a,
                                         const opconv_matrix* b,
                                         opconv_matrix** out) {
  if (auto s = require(a && b && out, "opconv_strengthened_ah_gap")) return s;
  return guarded([&] {
    return make_matrix(opconv::strengthened_ah_gap(a->value, b->value), out);
  });
}

opconv_status opconv_von_neumann_entropy(const opconv_matrix* rho, double* out) {
  if (auto s = require(rho && out, "opconv_von_neumann_entropy")) return s;
  return guarded([&] {
    *out = opconv::von_neumann_entropy(opconv::DensityMatrix(rho->value));
    return OPCONV_OK;
  });
}

opconv_status opconv_relative_entropy(const opconv_matrix* rho,
                                      const opconv_matrix* sigma, double* out) {
  if (auto s = require(rho && sigma && out, "opconv_relative_entropy")) return s;
  return guarded([&] {
    *out = opconv::quantum_relative_entropy(opconv::DensityMatrix(rho->value),
                                            opconv::DensityMatrix(sigma->value));
    return OPCONV_OK;
  });
}

opconv_status opconv_trace_distance(const opconv_matrix* rho,
                                    const opconv_matrix* sigma, double* out) {
  if (auto s = require(rho && sigma && out, "opconv_trace_distance")) return s;
  return guarded([&] {
    *out = opconv::trace_distance(opconv::DensityMatrix(rho->value),
                                  opconv::DensityMatrix(sigma->value));
    return OPCONV_OK;
  });
}

opconv_status opconv_run_verify(const opconv_verify_options* options,
                                char** report_json, int* violation_count) {
  if (auto s = require(options && options->suite && report_json && violation_count,
                       "opconv_run_verify")) {
    return s;
  }
  return guarded([&] {
    opconv::VerifyOptions opts;
    opts.suite = options->suite;
    if (options->functions != nullptr) {
      opts.functions = opconv::parse_token_list(options->functions);
    }
    if (options->c_values != nullptr) {
      opts.c_values = opconv::parse_double_list(options->c_values);
    }
    if (options->dims != nullptr) {
      std::tie(opts.dim_min, opts.dim_max) = opconv::parse_dim_range(options->dims);
    }
    opts.seed = options->seed;
    if (options->trials > 0) opts.trials = options->trials;
    if (options->tol > 0.0) opts.tol = options->tol;
    const auto outcome = opconv::run_verify(opts);
    *report_json = copy_string(outcome.report.dump(2));
    *violation_count = outcome.violation_count;
    return OPCONV_OK;
  });
}

opconv_status opconv_run_gap(const opconv_matrix* a, const opconv_matrix* b, double c,
                             const opconv_function* f, double tol,
                             char** report_json, int* is_violation) {
  if (auto s = require(a && b && f && report_json && is_violation, "opconv_run_gap")) {
    return s;
  }
  return guarded([&] {
    bool violation = false;
    const auto report = opconv::gap_report(a->value, b->value, c, f->value,
                                           tol > 0.0 ? tol : 1e-8, &violation);
    *report_json = copy_string(report.dump(2));
    *is_violation = violation ? 1 : 0;
    return OPCONV_OK;
  });
}

opconv_status opconv_run_entropy(const opconv_matrix* rho, const opconv_matrix* sigma,
                                 double c, char** report_json, int* is_violation) {
  if (auto s =
          require(rho && sigma && report_json && is_violation, "opconv_run_entropy")) {
    return s;
  }
  return guarded([&] {
    bool violation = false;
    const auto report =
        opconv::entropy_report(opconv::DensityMatrix(rho->value),
                               opconv::DensityMatrix(sigma->value), c, &violation);
    *report_json = copy_string(report.dump(2));
    *is_violation = violation ? 1 : 0;
    return OPCONV_OK;
  });
}

opconv_status opconv_run_mine(const opconv_mine_options* options, char** report_json,
                              int* found) {
  if (auto s = require(options && options->function && report_json && found,
                       "opconv_run_mine")) {
    return s;
  }
  const opconv_status status = guarded([&] {
    const auto f = opconv::catalog_parse(options->function);
    const auto outcome = opconv::run_mine(f, build_miner_options(*options));
    *report_json = copy_string(outcome.report.dump(2));
    *found = outcome.record.has_value() ? 1 : 0;
    return OPCONV_OK;
  });
  if (status == OPCONV_ERR_INVALID_ARGUMENT &&
      g_last_error.rfind("unknown function", 0) == 0) {
    return OPCONV_ERR_UNKNOWN_FUNCTION;
  }
  return status;
}

}  // extern "C"
