// Command-line driver for the operator-convexity toolkit. Talks to the
// shared library exclusively through the C interface.
//
// Exit codes: 0 all checks passed, 1 an inequality was violated, 2 usage or
// input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "opconv/opconv.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct MatrixDeleter {
  void operator()(opconv_matrix* m) const { opconv_matrix_free(m); }
};
struct FunctionDeleter {
  void operator()(opconv_function* f) const { opconv_function_free(f); }
};
using MatrixHandle = std::unique_ptr<opconv_matrix, MatrixDeleter>;
using FunctionHandle = std::unique_ptr<opconv_function, FunctionDeleter>;

[[noreturn]] void fail(const std::string& context) {
  std::cerr << "error: " << context << ": " << opconv_last_error() << "\n";
  std::exit(kExitError);
}

MatrixHandle load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(kExitError);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  opconv_matrix* raw = nullptr;
  double asymmetry = 0.0;
  if (opconv_matrix_parse(buffer.str().c_str(), &raw, &asymmetry) != OPCONV_OK) {
    fail(path);
  }
  if (asymmetry > 1e-8) {
    std::cerr << "warning: " << path << " deviates from Hermitian symmetry by "
              << asymmetry << "; symmetrized\n";
  }
  return MatrixHandle(raw);
}

FunctionHandle load_function(const std::string& token) {
  opconv_function* raw = nullptr;
  if (opconv_function_lookup(token.c_str(), &raw) != OPCONV_OK) fail(token);
  return FunctionHandle(raw);
}

void emit_report(const char* report, const std::string& out_path) {
  std::cout << report << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      std::exit(kExitError);
    }
    out << report << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator convexity inequality toolkit"};
  app.set_version_flag("--version", std::string(opconv_version()));
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int trials = 0;  // 0: library default
  double tol = 0.0;
  std::string out_path;

  // verify -------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a seeded verification suite");
  std::string suite = "theorem1";
  std::string functions, dims, c_list;
  verify->add_option("--suite", suite,
                     "theorem1 | ah | bregman | entropy | dilation");
  verify->add_option("--functions", functions, "comma-separated catalog tokens");
  verify->add_option("--dims", dims, "dimension range a..b (default 1..8)");
  verify->add_option("--c", c_list, "comma-separated mixing weights");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--trials", trials, "trial count (default 500)");
  verify->add_option("--tol", tol, "PSD tolerance scale (default 1e-8)");
  verify->add_option("--out", out_path, "also write the report here");

  // gap ----------------------------------------------------------------
  auto* gap = app.add_subcommand("gap", "evaluate one (A, B, c, f) instance");
  std::string a_path, b_path, function_token = "resolvent:1";
  double c_value = 0.25;
  gap->add_option("--a", a_path, "matrix file for A")->required();
  gap->add_option("--b", b_path, "matrix file for B")->required();
  gap->add_option("--c", c_value, "mixing weight in (0,1)");
  gap->add_option("--function", function_token, "catalog token");
  gap->add_option("--tol", tol, "PSD tolerance scale (default 1e-8)");
  gap->add_option("--out", out_path, "also write the report here");

  // entropy --------------------------------------------------------------
  auto* entropy = app.add_subcommand("entropy", "entropy diagnostics for a state pair");
  std::string rho_path, sigma_path;
  entropy->add_option("--rho", rho_path, "density matrix file")->required();
  entropy->add_option("--sigma", sigma_path, "density matrix file")->required();
  entropy->add_option("--c", c_value, "mixing weight in [0,1]");
  entropy->add_option("--out", out_path, "also write the report here");

  // mine -----------------------------------------------------------------
  auto* mine = app.add_subcommand("mine", "search for lower-bound violations");
  mine->add_option("--function", function_token, "catalog token")->required();
  mine->add_option("--dims", dims, "dimension range a..b (default 1..4)");
  mine->add_option("--c", c_list, "comma-separated mixing weights");
  mine->add_option("--seed", seed, "master seed");
  mine->add_option("--trials", trials, "random trial count (default 500)");
  mine->add_option("--out", out_path, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  if (verify->parsed()) {
    opconv_verify_options options{};
    options.suite = suite.c_str();
    options.functions = functions.empty() ? nullptr : functions.c_str();
    options.c_values = c_list.empty() ? nullptr : c_list.c_str();
    options.dims = dims.empty() ? nullptr : dims.c_str();
    options.seed = seed;
    options.trials = trials;
    options.tol = tol;
    char* report = nullptr;
    int violations = 0;
    if (opconv_run_verify(&options, &report, &violations) != OPCONV_OK) {
      fail("verify");
    }
    emit_report(report, out_path);
    opconv_string_free(report);
    return violations == 0 ? kExitPass : kExitViolation;
  }

  if (gap->parsed()) {
    const MatrixHandle a = load_matrix(a_path);
    const MatrixHandle b = load_matrix(b_path);
    const FunctionHandle f = load_function(function_token);
    char* report = nullptr;
    int violation = 0;
    if (opconv_run_gap(a.get(), b.get(), c_value, f.get(), tol, &report,
                       &violation) != OPCONV_OK) {
      fail("gap");
    }
    emit_report(report, out_path);
    opconv_string_free(report);
    return violation == 0 ? kExitPass : kExitViolation;
  }

  if (entropy->parsed()) {
    const MatrixHandle rho = load_matrix(rho_path);
    const MatrixHandle sigma = load_matrix(sigma_path);
    char* report = nullptr;
    int violation = 0;
    if (opconv_run_entropy(rho.get(), sigma.get(), c_value, &report, &violation) !=
        OPCONV_OK) {
      fail("entropy");
    }
    emit_report(report, out_path);
    opconv_string_free(report);
    return violation == 0 ? kExitPass : kExitViolation;
  }

  // mine
  opconv_mine_options options{};
  options.function = function_token.c_str();
  options.dims = dims.empty() ? nullptr : dims.c_str();
  options.c_values = c_list.empty() ? nullptr : c_list.c_str();
  options.seed = seed;
  options.trials = trials;
  char* report = nullptr;
  int found = 0;
  if (opconv_run_mine(&options, &report, &found) != OPCONV_OK) fail("mine");
  emit_report(report, out_path);
  opconv_string_free(report);
  return found == 0 ? kExitPass : kExitViolation;
}
