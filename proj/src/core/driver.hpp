#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/entropy.hpp"
#include "core/hermitian.hpp"
#include "core/miner.hpp"

namespace opconv {

// Asymmetry thresholds for file-sourced matrices: warn above the first,
// reject above the second.
inline constexpr double kParseWarnAsymmetry = 1e-8;
inline constexpr double kParseRejectAsymmetry = 1e-4;

// Entropy-suite thresholds (scalar gaps, not PSD certificates).
inline constexpr double kCorollaryTol = 1e-9;
inline constexpr double kPinskerTol = 1e-12;

// Parses {"dim": n, "real": [[...]], "imag": [[...]]} (imag optional).
// Reports the raw asymmetry through `asymmetry_out` when non-null; rejects
// documents whose asymmetry exceeds the hard limit.
HermitianMatrix parse_matrix(const std::string& text, double* asymmetry_out = nullptr);

// Serializes to the same document shape; values round-trip bit-exactly.
std::string serialize_matrix(const HermitianMatrix& m);
nlohmann::json matrix_to_json(const HermitianMatrix& m);

struct VerifyOptions {
  std::string suite = "theorem1";
  std::vector<std::string> functions;  // empty: suite default
  std::uint64_t seed = 0;
  int trials = 500;
  double tol = 1e-8;
  int dim_min = 1;
  int dim_max = 8;
  std::vector<double> c_values;  // empty: default grid
};

struct VerifyOutcome {
  nlohmann::json report;
  int violation_count = 0;
};

// Runs one verification suite (theorem1 | ah | bregman | entropy | dilation)
// over seeded random instances and returns a machine-readable report.
VerifyOutcome run_verify(const VerifyOptions& options);

// Single-instance lower-bound evaluation for (A, B, c, f).
nlohmann::json gap_report(const HermitianMatrix& a, const HermitianMatrix& b,
                          double c, const FunctionDescriptor& f, double tol,
                          bool* violation_out = nullptr);

// Single-pair entropy diagnostics for (rho, sigma, c).
nlohmann::json entropy_report(const DensityMatrix& rho, const DensityMatrix& sigma,
                              double c, bool* violation_out = nullptr);

struct MineOutcome {
  nlohmann::json report;
  std::optional<CounterexampleRecord> record;
};

// Violation search driver; report embeds the witness when one is found.
MineOutcome run_mine(const FunctionDescriptor& f, const MinerOptions& options);

// "a..b" -> {a, b}; throws std::invalid_argument on malformed ranges.
std::pair<int, int> parse_dim_range(const std::string& text);

// Comma-separated doubles.
std::vector<double> parse_double_list(const std::string& text);

// Comma-separated tokens.
std::vector<std::string> parse_token_list(const std::string& text);

}  // namespace opconv
