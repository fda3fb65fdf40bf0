#pragma once

// Iterative constrained-projection reconstruction: alternate between the
// probability space (blockwise movies, rescaled to match the measured
// azimuthal components) and the density-matrix space (physicality
// constraints), with the analytic block inversion as the bridge.

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qtomo/mblock.hpp"
#include "qtomo/rotor.hpp"

namespace qtomo {

// Conserved diagonal sums, one per (m, J-parity) class. A linearly polarized
// pulse cannot move population between classes, so the thermal occupancies
// pin these sums for all later times.
struct PartialTraceTargets {
  int j_max = -1;
  Eigen::MatrixXd values;  // (2 j_max + 1) x 2, indexed (m + j_max, parity)

  double at(int m, int parity) const { return values(m + j_max, parity); }
  double& at(int m, int parity) { return values(m + j_max, parity); }
  double sum() const { return values.sum(); }

  static PartialTraceTargets zero(int j_max);
  static PartialTraceTargets from_weights(const ThermalWeights& w, int j_max);
  static PartialTraceTargets from_density(const RotationalDensityMatrix& rho);
};

enum class ConstraintStage {
  hermitize,
  support,
  partial_trace,
  positivity,
  m_symmetry,
  trace_normalize,
};

std::vector<ConstraintStage> default_constraint_order();

struct ConstraintSet {
  std::vector<ConstraintStage> order = default_constraint_order();
  std::optional<PartialTraceTargets> partial_traces;
  // Per-m cap on J (index m + j_max); entries below |m| disable the block.
  std::optional<std::vector<int>> support;
  bool m_symmetry = true;
  double hio_beta = 0.9;          // relaxation of the positivity update
  double trace_tolerance = 1e-3;  // allowed partial-trace mismatch
  double psd_tolerance = 1e-8;    // allowed negative eigenvalue magnitude
  int hio_max_iterations = 200;
};

struct ConstraintReport {
  bool hio_converged = true;
  int hio_iterations = 0;
  double min_eigenvalue = 0.0;      // before the positivity stage
  bool partial_trace_ok = true;     // within trace_tolerance after scaling
  long redistributed_classes = 0;   // classes rebuilt from a ~zero current sum
};

// Applies the configured stages in order. Output is exactly Hermitian,
// trace 1, m-symmetric, with min eigenvalue >= -psd_tolerance unless the
// positivity loop hits its cap (then the best iterate is returned and the
// report flags it).
RotationalDensityMatrix density_constraints(const RotationalDensityMatrix& rho,
                                            const ConstraintSet& constraints,
                                            ConstraintReport* report = nullptr);

// Azimuthal Fourier components Ptr_k(theta, t) = int Pr e^{-i k phi} dphi of
// a measured movie.
struct MeasuredComponents {
  std::vector<int> ks;
  std::vector<Eigen::MatrixXcd> values;  // n_theta x n_t each

  bool has(int k) const;
  const Eigen::MatrixXcd& at(int k) const;
};

MeasuredComponents azimuthal_components(const AngularDistribution& movie,
                                        const std::vector<int>& ks);

struct ScalingReport {
  long zero_denominator_nodes = 0;  // nodes where the equal split applied
};

// Rescales every block so that, for each coherence index k = m1 - m2, the sum
// over blocks matches the measured component exactly at every (theta, t)
// node while block-to-block proportions are preserved. Where the current sum
// is ~0 the measured value is split equally among the participating blocks.
BlockwiseProbability probability_constraint(const BlockwiseProbability& bw,
                                            const MeasuredComponents& measured,
                                            ScalingReport* report = nullptr);

// Normalized elementwise L1 distances.
double density_error(const RotationalDensityMatrix& rho,
                     const RotationalDensityMatrix& reference);
double probability_error(const Eigen::MatrixXcd& pr,
                         const Eigen::MatrixXcd& reference);
std::pair<double, double> error_metrics(const RotationalDensityMatrix& rho_n,
                                        const RotationalDensityMatrix& rho_ref,
                                        const Eigen::MatrixXcd& pr_n,
                                        const Eigen::MatrixXcd& pr_ref);

// Sampling bounds a measurement must satisfy for order j_max: time spacing
// fine enough for the fastest beat over one revival (in cycles), and theta
// spacing resolving the finest nodal structure.
struct ResolutionRequirements {
  double dt_max_ps = 0.0;
  double dtheta_max_rad = 0.0;
};
ResolutionRequirements resolution_requirements(int j_max, double inertia_ps);

struct QtConfig {
  int max_iterations = 50;
  // Scale-and-invert repetitions per iteration. A single pass loses most of
  // the pointwise correction when the blocks are re-projected onto their
  // band-limited form; repeating the pair walks the blockwise decomposition
  // onto the measurement before the density constraints are applied.
  int probability_passes = 8;
  double plateau_rel_change = 1e-6;
  int plateau_window = 5;
  double divergence_factor = 10.0;
  bool enforce_grids = true;  // sampling guards inside the block inversion
  ConstraintSet constraints;
};

struct IterationRecord {
  int iteration = 0;
  double error_rho = 0.0;
  double error_pr = 0.0;
};

struct QtResult {
  RotationalDensityMatrix rho;
  std::vector<IterationRecord> history;
  bool plateaued = false;
  // Error grew 10x above its running minimum; the loop stops early and the
  // history carries the diagnostic trajectory. The CLI maps this to its
  // divergence exit code.
  bool diverged = false;
  bool hio_converged = true;
  long zero_denominator_nodes = 0;
};

// Full reconstruction loop. When `reference` is null, error_rho falls back to
// the distance from the previous iterate (Cauchy criterion); error_pr is
// always measured against the movie's azimuthal components.
QtResult qt_iterate(const RotationalDensityMatrix& initial,
                    const AngularDistribution& measured, const RotorSpec& spec,
                    const QtConfig& config,
                    const RotationalDensityMatrix* reference = nullptr);

// Random positive-semidefinite trace-1 state, reproducible from the seed.
RotationalDensityMatrix random_density(int j_max, std::uint64_t seed);

}  // namespace qtomo
