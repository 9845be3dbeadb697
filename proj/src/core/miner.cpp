#include "core/miner.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "core/rng.hpp"
#include "core/sampler.hpp"

namespace opconv {

namespace {

// Feasibility floor during refinement; keeps iterates positive definite and
// comfortably inside every cataloged domain.
constexpr double kRefineEigenFloor = 1e-4;
constexpr int kRefineSweeps = 20;
constexpr double kRefineInitialStep = 0.25;

struct Candidate {
  double value = 0.0;
  std::int64_t index = -1;
  HermitianMatrix a = HermitianMatrix::scalar(1.0);
  HermitianMatrix b = HermitianMatrix::scalar(1.0);
  double c = 0.25;
};

void validate(const MinerOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("miner trials must be >= 1");
  if (opts.dims.empty()) throw std::invalid_argument("miner dims must be nonempty");
  for (int d : opts.dims) {
    if (d < 1 || d > 8) throw std::invalid_argument("miner dims must lie in [1,8]");
  }
  if (opts.c_grid.empty()) throw std::invalid_argument("miner c grid must be nonempty");
  for (double c : opts.c_grid) {
    if (!(c > 0.0 && c < 1.0) || std::abs(c - 0.5) <= kMidpointBand) {
      throw std::invalid_argument(
          "miner c values must lie in (0,1) outside the midpoint band");
    }
  }
}

double gap_min_eigenvalue(const FunctionDescriptor& f, const HermitianMatrix& a,
                          const HermitianMatrix& b, double c, double* gap_norm) {
  const auto verdict =
      psd_certificate(theorem1_gap(ConvexityInstance(a, b, c, f)), 0.0);
  if (gap_norm != nullptr) *gap_norm = verdict.gap_norm;
  return verdict.min_eigenvalue;
}

// Packs (A, B, c) into a real coordinate vector for the descent sweeps:
// diagonal entries, then real/imag parts of the upper triangle, per matrix,
// then the weight.
struct Coordinates {
  std::vector<double> values;
  int dim = 1;

  static Coordinates pack(const HermitianMatrix& a, const HermitianMatrix& b,
                          double c) {
    Coordinates coords;
    coords.dim = a.dim();
    auto push_matrix = [&coords](const HermitianMatrix& m) {
      const int n = m.dim();
      for (int i = 0; i < n; ++i) coords.values.push_back(m.entries()(i, i).real());
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          coords.values.push_back(m.entries()(i, j).real());
          coords.values.push_back(m.entries()(i, j).imag());
        }
      }
    };
    push_matrix(a);
    push_matrix(b);
    coords.values.push_back(c);
    return coords;
  }

  HermitianMatrix matrix_at(int which) const {
    const int n = dim;
    const int block = n * n;  // n diagonal + 2 * n(n-1)/2 triangle reals
    std::size_t pos = static_cast<std::size_t>(which) * block;
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = values[pos++];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double re = values[pos++];
        const double im = values[pos++];
        m(i, j) = Complex(re, im);
        m(j, i) = Complex(re, -im);
      }
    }
    return HermitianMatrix(m);
  }

  double weight() const { return values.back(); }
};

bool feasible(const Coordinates& coords) {
  const double c = coords.weight();
  if (!(c > 0.01 && c < 0.99) || std::abs(c - 0.5) <= kMidpointBand) return false;
  return min_eigenvalue(coords.matrix_at(0)) > kRefineEigenFloor &&
         min_eigenvalue(coords.matrix_at(1)) > kRefineEigenFloor;
}

// Coordinate descent with step halving; deepens the violation found by the
// sweep. Deterministic, so the refined witness is reproducible.
Candidate refine(const FunctionDescriptor& f, Candidate seed_candidate) {
  Coordinates coords =
      Coordinates::pack(seed_candidate.a, seed_candidate.b, seed_candidate.c);
  double best = seed_candidate.value;
  double step = kRefineInitialStep;
  for (int sweep = 0; sweep < kRefineSweeps; ++sweep) {
    for (std::size_t p = 0; p < coords.values.size(); ++p) {
      for (const double direction : {+1.0, -1.0}) {
        Coordinates trial = coords;
        trial.values[p] += direction * step;
        if (!feasible(trial)) continue;
        const double value = gap_min_eigenvalue(f, trial.matrix_at(0),
                                                trial.matrix_at(1),
                                                trial.weight(), nullptr);
        if (value < best) {
          best = value;
          coords = trial;
        }
      }
    }
    step *= 0.5;
  }
  seed_candidate.a = coords.matrix_at(0);
  seed_candidate.b = coords.matrix_at(1);
  seed_candidate.c = coords.weight();
  seed_candidate.value = best;
  return seed_candidate;
}

}  // namespace

const std::vector<double>& miner_scalar_grid() {
  static const std::vector<double> grid = {0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0,
                                           2.5, 3.0,  4.0,  5.0,  6.5, 8.0, 10.0};
  return grid;
}

std::optional<CounterexampleRecord> mine_counterexample(const FunctionDescriptor& f,
                                                        const MinerOptions& opts) {
  validate(opts);
  std::optional<Candidate> best;
  auto consider = [&](const HermitianMatrix& a, const HermitianMatrix& b, double c,
                      std::int64_t index) {
    double gap_norm = 0.0;
    const double value = gap_min_eigenvalue(f, a, b, c, &gap_norm);
    if (value >= -kViolationScale * (1.0 + gap_norm)) return;
    if (!best || value < best->value) {
      best = Candidate{value, index, a, b, c};
    }
  };

  // Scalar sweep first: the violation argument is dimension-free, so the
  // cheapest witnesses live on the (a, b, c) grid.
  std::int64_t index = 0;
  for (const double a : miner_scalar_grid()) {
    for (const double b : miner_scalar_grid()) {
      for (const double c : opts.c_grid) {
        consider(HermitianMatrix::scalar(a), HermitianMatrix::scalar(b), c, index++);
      }
    }
  }

  // Seeded random matrix phase; draw t is a pure function of (seed, t).
  for (int t = 0; t < opts.trials; ++t) {
    const int dim = opts.dims[static_cast<std::size_t>(t) % opts.dims.size()];
    const double c = opts.c_grid[static_cast<std::size_t>(t) % opts.c_grid.size()];
    SamplerConfig cfg_a{derive_stream_seed(opts.seed, 2 * static_cast<std::uint64_t>(t)),
                        dim, opts.eigen_floor, opts.scale};
    SamplerConfig cfg_b{derive_stream_seed(opts.seed, 2 * static_cast<std::uint64_t>(t) + 1),
                        dim, opts.eigen_floor, opts.scale};
    consider(random_positive_definite(cfg_a), random_positive_definite(cfg_b), c,
             index + t);
  }

  if (!best) return std::nullopt;
  const Candidate refined = refine(f, *best);
  return CounterexampleRecord{refined.a,        refined.b,
                              refined.c,        f.name,
                              refined.value,    refined.index};
}

}  // namespace opconv
