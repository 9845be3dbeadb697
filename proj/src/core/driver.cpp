#include "core/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include "core/inequalities.hpp"
#include "core/rng.hpp"
#include "core/sampler.hpp"
#include "core/version.hpp"

namespace opconv {

namespace {

using nlohmann::json;

// Non-finite doubles have no JSON representation; emit them as strings.
json json_number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return "nan";
}

json require_object(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed matrix document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  return doc;
}

Eigen::MatrixXd read_grid(const json& doc, const char* key, int dim) {
  const auto& rows = doc.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw ParseError(std::string("field '") + key + "' must hold " +
                     std::to_string(dim) + " rows");
  }
  Eigen::MatrixXd grid(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError(std::string("row ") + std::to_string(i) + " of '" + key +
                       "' must hold " + std::to_string(dim) + " numbers");
    }
    for (int j = 0; j < dim; ++j) {
      if (!row[j].is_number()) {
        throw ParseError(std::string("non-numeric entry in '") + key + "'");
      }
      grid(i, j) = row[j].get<double>();
    }
  }
  return grid;
}

// One verification check outcome; margin >= threshold counts as a pass.
struct CheckStats {
  int pass = 0;
  int fail = 0;
  double worst = std::numeric_limits<double>::infinity();
};

struct Offender {
  double margin;
  int trial;
  std::string check;
  int dim;
  double c;
};

class SuiteRecorder {
 public:
  explicit SuiteRecorder(double tol) : tol_(tol) {}

  void record(const std::string& check, int trial, int dim, double c, double margin,
              double threshold, const json& instance) {
    auto& stats = checks_[check];
    stats.worst = std::min(stats.worst, margin);
    if (margin >= threshold) {
      ++stats.pass;
    } else {
      ++stats.fail;
      if (margin < worst_failure_margin_) {
        worst_failure_margin_ = margin;
        worst_failure_ = instance;
        worst_failure_["check"] = check;
        worst_failure_["trial"] = trial;
        worst_failure_["margin"] = json_number(margin);
      }
    }
    offenders_.push_back({margin, trial, check, dim, c});
  }

  void record_psd(const std::string& check, int trial, int dim, double c,
                  const HermitianMatrix& gap, const json& instance) {
    const PsdVerdict verdict = psd_certificate(gap, tol_);
    record(check, trial, dim, c, verdict.min_eigenvalue, -verdict.tolerance,
           instance);
  }

  int violations() const {
    int total = 0;
    for (const auto& [name, stats] : checks_) total += stats.fail;
    return total;
  }

  json finish() const {
    json checks = json::object();
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& [name, stats] : checks_) {
      checks[name] = {{"pass", stats.pass},
                      {"fail", stats.fail},
                      {"trials", stats.pass + stats.fail},
                      {"worst_margin", json_number(stats.worst)}};
      worst = std::min(worst, stats.worst);
    }
    json report;
    report["checks"] = checks;
    report["worst_margin"] = json_number(worst);
    report["violations"] = violations();

    auto sorted = offenders_;
    std::sort(sorted.begin(), sorted.end(), [](const Offender& x, const Offender& y) {
      if (x.margin != y.margin) return x.margin < y.margin;
      if (x.trial != y.trial) return x.trial < y.trial;
      return x.check < y.check;
    });
    if (sorted.size() > 10) sorted.resize(10);
    json offenders = json::array();
    for (const auto& o : sorted) {
      offenders.push_back({{"check", o.check},
                           {"trial", o.trial},
                           {"dim", o.dim},
                           {"c", o.c},
                           {"margin", json_number(o.margin)}});
    }
    report["offenders"] = offenders;
    if (violations() > 0) report["counterexample"] = worst_failure_;
    return report;
  }

 private:
  double tol_;
  std::map<std::string, CheckStats> checks_;
  std::vector<Offender> offenders_;
  double worst_failure_margin_ = std::numeric_limits<double>::infinity();
  json worst_failure_;
};

void validate_options(const VerifyOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (options.tol < 0.0) throw std::invalid_argument("tol must be >= 0");
  if (options.dim_min < 1 || options.dim_max < options.dim_min ||
      options.dim_max > 16) {
    throw std::invalid_argument("dims must satisfy 1 <= min <= max <= 16");
  }
  for (double c : options.c_values) {
    if (!(c > 0.0 && c < 1.0)) {
      throw std::invalid_argument("c values must lie strictly inside (0,1)");
    }
  }
}

const std::vector<double>& default_c_grid() {
  static const std::vector<double> grid = {0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9};
  return grid;
}

struct TrialInputs {
  int dim;
  double c;
  HermitianMatrix a;
  HermitianMatrix b;
};

TrialInputs draw_positive_pair(const VerifyOptions& options,
                               const std::vector<double>& c_grid, int trial) {
  const int span = options.dim_max - options.dim_min + 1;
  const int dim = options.dim_min + trial % span;
  const double c = c_grid[static_cast<std::size_t>(trial) % c_grid.size()];
  const auto t = static_cast<std::uint64_t>(trial);
  const SamplerConfig cfg_a{derive_stream_seed(options.seed, 2 * t), dim, 0.05, 1.0};
  const SamplerConfig cfg_b{derive_stream_seed(options.seed, 2 * t + 1), dim, 0.05, 1.0};
  return {dim, c, random_positive_definite(cfg_a), random_positive_definite(cfg_b)};
}

json pair_instance_json(const TrialInputs& inputs, const std::string& function) {
  json instance;
  instance["function"] = function;
  instance["dim"] = inputs.dim;
  instance["c"] = inputs.c;
  instance["a"] = matrix_to_json(inputs.a);
  instance["b"] = matrix_to_json(inputs.b);
  return instance;
}

void run_function_suite(const VerifyOptions& options, SuiteRecorder& recorder,
                        bool bregman_only) {
  const auto& names =
      options.functions.empty() ? default_verify_functions() : options.functions;
  std::vector<FunctionDescriptor> descriptors;
  descriptors.reserve(names.size());
  for (const auto& name : names) descriptors.push_back(catalog_parse(name));

  const auto& c_grid = options.c_values.empty() ? default_c_grid() : options.c_values;
  for (int trial = 0; trial < options.trials; ++trial) {
    const TrialInputs inputs = draw_positive_pair(options, c_grid, trial);
    for (const auto& f : descriptors) {
      const HermitianMatrix gap =
          bregman_only
              ? bregman_divergence(f, inputs.a, inputs.b)
              : theorem1_gap(ConvexityInstance(inputs.a, inputs.b, inputs.c, f));
      recorder.record_psd(f.name, trial, inputs.dim, inputs.c, gap,
                          pair_instance_json(inputs, f.name));
    }
  }
}

void run_ah_suite(const VerifyOptions& options, SuiteRecorder& recorder) {
  static const double kShifts[] = {0.0, 0.1, 1.0, 10.0};
  const auto& c_grid = options.c_values.empty() ? default_c_grid() : options.c_values;
  for (int trial = 0; trial < options.trials; ++trial) {
    const TrialInputs inputs = draw_positive_pair(options, c_grid, trial);
    for (const double shift : kShifts) {
      const HermitianMatrix gap =
          strengthened_ah_gap(inputs.a.shifted(shift), inputs.b.shifted(shift));
      char name[32];
      std::snprintf(name, sizeof(name), "ah:shift=%g", shift);
      recorder.record_psd(name, trial, inputs.dim, inputs.c, gap,
                          pair_instance_json(inputs, name));
    }
  }
}

void run_dilation_suite(const VerifyOptions& options, SuiteRecorder& recorder) {
  const auto& c_grid = options.c_values.empty() ? default_c_grid() : options.c_values;
  const FunctionDescriptor resolvent = catalog("resolvent", {1.0});
  for (int trial = 0; trial < options.trials; ++trial) {
    const TrialInputs inputs = draw_positive_pair(options, c_grid, trial);
    const auto ops = build_dilation(inputs.a, inputs.b, inputs.c);
    const int n = inputs.dim;
    const double scale = 1.0 + ops.t.max_abs_entry();

    const ComplexMatrix eye = ComplexMatrix::Identity(2 * n, 2 * n);
    const double unitarity_err = (ops.w.adjoint() * ops.w - eye).cwiseAbs().maxCoeff();

    const double root_cc = std::sqrt(inputs.c * (1.0 - inputs.c));
    const ComplexMatrix d = inputs.a.entries() - inputs.b.entries();
    ComplexMatrix sum_expected = ComplexMatrix::Zero(2 * n, 2 * n);
    sum_expected.topLeftCorner(n, n) =
        inputs.c * inputs.a.entries() + (1.0 - inputs.c) * inputs.b.entries();
    sum_expected.bottomRightCorner(n, n) =
        inputs.c * inputs.b.entries() + (1.0 - inputs.c) * inputs.a.entries();
    ComplexMatrix diff_expected = ComplexMatrix::Zero(2 * n, 2 * n);
    diff_expected.topRightCorner(n, n) = root_cc * d;
    diff_expected.bottomLeftCorner(n, n) = root_cc * d;

    const double sum_err = (0.5 * (ops.t1.entries() + ops.t2.entries()) - sum_expected)
                               .cwiseAbs()
                               .maxCoeff();
    const double diff_err = (0.5 * (ops.t1.entries() - ops.t2.entries()) - diff_expected)
                                .cwiseAbs()
                                .maxCoeff();
    const double block_err = std::max({unitarity_err, sum_err, diff_err});
    const json instance = pair_instance_json(inputs, "dilation");
    recorder.record("dilation_blocks", trial, inputs.dim, inputs.c, -block_err,
                    -1e-10 * scale, instance);

    const PsdVerdict verdict = midpoint_from_dilation_check(
        inputs.a, inputs.b, inputs.c, resolvent, options.tol);
    recorder.record("dilation_midpoint", trial, inputs.dim, inputs.c,
                    verdict.min_eigenvalue, -verdict.tolerance, instance);
  }
}

void run_entropy_suite(const VerifyOptions& options, SuiteRecorder& recorder) {
  const auto& c_grid = options.c_values.empty() ? default_c_grid() : options.c_values;
  const int span = options.dim_max - options.dim_min + 1;
  for (int trial = 0; trial < options.trials; ++trial) {
    const int dim = options.dim_min + trial % span;
    const double c = c_grid[static_cast<std::size_t>(trial) % c_grid.size()];
    const auto t = static_cast<std::uint64_t>(trial);
    const SamplerConfig cfg_r{derive_stream_seed(options.seed, 2 * t), dim, 0.05, 1.0};
    const SamplerConfig cfg_s{derive_stream_seed(options.seed, 2 * t + 1), dim, 0.05, 1.0};
    const DensityMatrix rho = random_density(cfg_r);
    const DensityMatrix sigma = random_density(cfg_s);

    json instance;
    instance["dim"] = dim;
    instance["c"] = c;
    instance["rho"] = matrix_to_json(rho.matrix());
    instance["sigma"] = matrix_to_json(sigma.matrix());

    recorder.record("corollary", trial, dim, c, corollary_gap(rho, sigma, c),
                    -kCorollaryTol, instance);
    recorder.record("pinsker", trial, dim, c, pinsker_gap(rho, sigma), -kPinskerTol,
                    instance);
    if (std::abs(c - 0.5) > kMidpointBand) {
      recorder.record("intermediate", trial, dim, c,
                      intermediate_bound_gap(rho, sigma, c), -kCorollaryTol,
                      instance);
    }
  }
}

}  // namespace

HermitianMatrix parse_matrix(const std::string& text, double* asymmetry_out) {
  const json doc = require_object(text);
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("matrix document needs an integer 'dim'");
  }
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw ParseError("matrix dim must be >= 1");
  if (!doc.contains("real")) throw ParseError("matrix document needs a 'real' grid");
  const Eigen::MatrixXd real_part = read_grid(doc, "real", dim);
  ComplexMatrix m = real_part.cast<Complex>();
  if (doc.contains("imag") && !doc["imag"].is_null()) {
    m += Complex(0.0, 1.0) * read_grid(doc, "imag", dim).cast<Complex>();
  }
  const double asymmetry = max_asymmetry(m);
  if (asymmetry_out != nullptr) *asymmetry_out = asymmetry;
  if (asymmetry > kParseRejectAsymmetry) {
    throw ParseError("matrix asymmetry " + std::to_string(asymmetry) +
                     " exceeds the hard limit");
  }
  return HermitianMatrix(m);
}

nlohmann::json matrix_to_json(const HermitianMatrix& m) {
  const int dim = m.dim();
  json real_rows = json::array();
  json imag_rows = json::array();
  for (int i = 0; i < dim; ++i) {
    json real_row = json::array();
    json imag_row = json::array();
    for (int j = 0; j < dim; ++j) {
      real_row.push_back(m.entries()(i, j).real());
      imag_row.push_back(m.entries()(i, j).imag());
    }
    real_rows.push_back(real_row);
    imag_rows.push_back(imag_row);
  }
  json doc;
  doc["dim"] = dim;
  doc["real"] = real_rows;
  doc["imag"] = imag_rows;
  return doc;
}

std::string serialize_matrix(const HermitianMatrix& m) {
  return matrix_to_json(m).dump();
}

VerifyOutcome run_verify(const VerifyOptions& options) {
  validate_options(options);
  const auto start = std::chrono::steady_clock::now();

  SuiteRecorder recorder(options.tol);
  if (options.suite == "theorem1") {
    run_function_suite(options, recorder, /*bregman_only=*/false);
  } else if (options.suite == "bregman") {
    run_function_suite(options, recorder, /*bregman_only=*/true);
  } else if (options.suite == "ah") {
    run_ah_suite(options, recorder);
  } else if (options.suite == "dilation") {
    run_dilation_suite(options, recorder);
  } else if (options.suite == "entropy") {
    run_entropy_suite(options, recorder);
  } else {
    throw std::invalid_argument("unknown suite: " + options.suite);
  }

  json report = recorder.finish();
  report["suite"] = options.suite;
  report["version"] = kVersion;
  report["seed"] = options.seed;
  report["trials"] = options.trials;
  report["tol"] = options.tol;
  report["dims"] = {options.dim_min, options.dim_max};
  report["c_values"] = options.c_values.empty() ? default_c_grid() : options.c_values;
  if (!options.functions.empty()) report["functions"] = options.functions;
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
  return {report, recorder.violations()};
}

nlohmann::json gap_report(const HermitianMatrix& a, const HermitianMatrix& b,
                          double c, const FunctionDescriptor& f, double tol,
                          bool* violation_out) {
  const ConvexityInstance inst(a, b, c, f);
  const HermitianMatrix modulus = modulus_of_convexity(inst);
  const HermitianMatrix rhs = theorem1_rhs(inst);
  const PsdVerdict verdict = psd_certificate(modulus - rhs, tol);
  if (violation_out != nullptr) *violation_out = !verdict.is_psd;
  json report;
  report["version"] = kVersion;
  report["function"] = f.name;
  report["c"] = c;
  report["dim"] = a.dim();
  report["modulus"] = matrix_to_json(modulus);
  report["rhs"] = matrix_to_json(rhs);
  report["gap_min_eigenvalue"] = json_number(verdict.min_eigenvalue);
  report["gap_norm"] = json_number(verdict.gap_norm);
  report["tolerance"] = verdict.tolerance;
  report["is_psd"] = verdict.is_psd;
  return report;
}

nlohmann::json entropy_report(const DensityMatrix& rho, const DensityMatrix& sigma,
                              double c, bool* violation_out) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::invalid_argument("mixing weight must lie in [0,1]");
  }
  const double corollary = corollary_gap(rho, sigma, c);
  const double pinsker = pinsker_gap(rho, sigma);
  const bool violation =
      corollary < -kCorollaryTol || (std::isfinite(pinsker) && pinsker < -kPinskerTol);
  if (violation_out != nullptr) *violation_out = violation;
  json report;
  report["version"] = kVersion;
  report["c"] = c;
  report["dim"] = rho.dim();
  report["entropy_rho"] = von_neumann_entropy(rho);
  report["entropy_sigma"] = von_neumann_entropy(sigma);
  report["concavity_gap"] = concavity_gap(rho, sigma, c);
  report["trace_distance"] = trace_distance(rho, sigma);
  report["relative_entropy"] = json_number(quantum_relative_entropy(rho, sigma));
  report["corollary_gap"] = json_number(corollary);
  report["pinsker_gap"] = json_number(pinsker);
  report["is_violation"] = violation;
  return report;
}

MineOutcome run_mine(const FunctionDescriptor& f, const MinerOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto record = mine_counterexample(f, options);
  json report;
  report["version"] = kVersion;
  report["function"] = f.name;
  report["seed"] = options.seed;
  report["trials"] = options.trials;
  report["dims"] = options.dims;
  report["c_grid"] = options.c_grid;
  report["scalar_sweep_points"] =
      miner_scalar_grid().size() * miner_scalar_grid().size() * options.c_grid.size();
  report["found"] = record.has_value();
  if (record) {
    json witness;
    witness["function"] = record->function_name;
    witness["a"] = matrix_to_json(record->a);
    witness["b"] = matrix_to_json(record->b);
    witness["c"] = record->c;
    witness["min_gap_eigenvalue"] = json_number(record->min_gap_eigenvalue);
    witness["trial_index"] = record->trial_index;
    report["record"] = witness;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
  return {report, std::move(record)};
}

std::pair<int, int> parse_dim_range(const std::string& text) {
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      const int single = std::stoi(text);
      return {single, single};
    }
    const int lo = std::stoi(text.substr(0, sep));
    const int hi = std::stoi(text.substr(sep + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed dimension range: " + text);
  }
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed number in list: " + item);
      }
      if (used != item.size()) {
        throw std::invalid_argument("malformed number in list: " + item);
      }
      values.push_back(v);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

std::vector<std::string> parse_token_list(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) tokens.push_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return tokens;
}

}  // namespace opconv
