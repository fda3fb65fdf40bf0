#pragma once

// Separable N-mode vibrational tomography. A probability movie Pr(x, t) over
// one fundamental period T = 2 pi / w0 decomposes into time-Fourier
// components Pr_k; each k collects the coherence blocks Pr_Delta with
// sum_i Delta_i r_i = k, where Delta_i = m_i - n_i is the per-mode quantum
// number offset and r_i the integer frequency ratio (w_i = r_i w0). Blocks
// alone at their k are read off directly and inverted through the pattern
// functions; blocks sharing a k are split iteratively, mirroring the
// rotational loop.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qtomo/iterative.hpp"
#include "qtomo/oscillator.hpp"

namespace qtomo {

// Uniform samples across one fundamental period, femtosecond clock.
struct VibTimeGrid {
  double t0_fs = 0.0;
  double period_fs = 0.0;
  int n = 0;

  double dt_fs() const { return period_fs / n; }
  double time_fs(int k) const { return t0_fs + dt_fs() * k; }
};

struct OscillatorBasis {
  double base_frequency_radfs = 0.0;
  std::vector<int> ratios;
  std::vector<double> masses_amu;
  std::vector<int> n_max;
  // Per-mode dimensionless coordinate grids (x scaled by alpha_i).
  std::vector<Eigen::VectorXd> grids;

  int mode_count() const { return static_cast<int>(ratios.size()); }
  double frequency_radfs(int mode) const;
  double period_fs() const;
  // alpha_i = sqrt(m_i w_i / hbar) in 1/Angstrom; physical x = grid / alpha.
  double momentum_scale_invA(int mode) const;

  int basis_dim() const;
  long grid_cells() const;
  // Flat state index with mode 0 fastest.
  int state_index(const std::vector<int>& occupations) const;
  std::vector<int> occupations(int index) const;
  // Flat grid cell index with mode 0 fastest.
  long cell_index(const std::vector<int>& point) const;

  void validate(bool enforce_spacing = true) const;
};

struct VibrationalDensityMatrix {
  Eigen::MatrixXcd values;  // (i, j) = <state_i| rho |state_j>

  double trace() const { return values.trace().real(); }
  double abs_sum() const { return values.cwiseAbs().sum(); }
  void hermitize() { values = 0.5 * (values + values.adjoint()).eval(); }
  static VibrationalDensityMatrix zero(int dim);
};

struct VibBlock {
  std::vector<int> delta;    // m_i - n_i per mode
  Eigen::VectorXcd values;   // flattened over grid cells, mode 0 fastest
};

// Offset tuples whose beat frequencies coincide; the movie only determines
// their sum, recorded here for the iterative splitting stage.
struct VibSharedClass {
  int k = 0;
  std::vector<std::vector<int>> deltas;
  Eigen::VectorXcd measured;
};

struct BlockwiseVibProbability {
  std::vector<VibBlock> blocks;
  std::vector<VibSharedClass> shared;

  const VibBlock* find(const std::vector<int>& delta) const;
};

// Per-mode wavefunction and pattern-function samples, built once and shared
// across synthesis / inversion calls.
struct VibTables {
  std::vector<Eigen::MatrixXd> phi;  // (n_max+1) x grid points per mode
  std::vector<PatternFunctionTable> patterns;

  static VibTables build(const OscillatorBasis& basis, bool enforce = true);
};

BlockwiseVibProbability synthesize_blockwise_vib(
    const VibrationalDensityMatrix& rho, const OscillatorBasis& basis,
    const VibTables* tables = nullptr);

std::vector<Eigen::VectorXd> synthesize_vib_movie(
    const VibrationalDensityMatrix& rho, const OscillatorBasis& basis,
    const VibTimeGrid& times, const VibTables* tables = nullptr);

// Discrete Fourier transform of the movie over one period, then assignment
// of each component to its offset tuple where that tuple is alone at its k.
BlockwiseVibProbability blockwise_from_measurement(
    const std::vector<Eigen::VectorXd>& frames, const VibTimeGrid& times,
    const OscillatorBasis& basis, bool enforce = true);

VibrationalDensityMatrix density_from_blockwise(
    const BlockwiseVibProbability& blockwise, const OscillatorBasis& basis,
    const VibTables* tables = nullptr);

// Product of per-mode momentum powers, e.g. powers {2, 1} = p1^2 p2.
// Matrix elements carry the physical alpha_i^power scale factors.
struct MomentumObservable {
  std::vector<int> powers;
};

Eigen::MatrixXcd momentum_observable_matrix(const OscillatorBasis& basis,
                                            const MomentumObservable& obs);

// Extra projection for coherences invisible to the position movie: a pair of
// degenerate states whose off-diagonal imaginary part the observable pins.
struct VibMomentumConstraint {
  MomentumObservable observable;
  double measured = 0.0;
  std::vector<int> bra;
  std::vector<int> ket;
};

// |Tr(rho A) - measured|; sets *uninformative when the observable cannot see
// the targeted coherence.
double degenerate_momentum_constraint(const VibrationalDensityMatrix& rho,
                                      const OscillatorBasis& basis,
                                      const VibMomentumConstraint& constraint,
                                      bool* uninformative = nullptr);

struct VibQtConfig {
  int max_iterations = 30;
  double plateau_rel_change = 1e-6;
  int plateau_window = 5;
  double divergence_factor = 10.0;
  bool enforce_grids = true;
  double hio_beta = 0.9;
  double psd_tolerance = 1e-8;
  int hio_max_iterations = 200;
  uint64_t seed = 20260814;
  std::optional<Eigen::VectorXd> diagonal_targets;
  std::vector<VibMomentumConstraint> momentum_constraints;
};

struct VibQtResult {
  VibrationalDensityMatrix rho;
  std::vector<IterationRecord> history;
  bool plateaued = false;
  bool diverged = false;  // mapped to the divergence exit code by the CLI
  bool hio_converged = true;
  int uninformative_constraints = 0;
};

VibQtResult iterative_vib_qt(const BlockwiseVibProbability& measured,
                             const OscillatorBasis& basis,
                             const VibQtConfig& config,
                             const VibrationalDensityMatrix* initial = nullptr,
                             const VibrationalDensityMatrix* reference = nullptr);

VibrationalDensityMatrix random_vib_density(int dim, uint64_t seed);

// Normalized elementwise L1 distance, denominator from the reference.
double vib_density_error(const VibrationalDensityMatrix& candidate,
                         const VibrationalDensityMatrix& reference);

}  // namespace qtomo
