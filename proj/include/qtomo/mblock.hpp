#pragma once

// Analytic inversion between projection-resolved probability blocks
// Pr_{m1,m2}(theta, t) and density-matrix elements <J1 m1|rho|J2 m2>.
//
// The forward map for one block over a rigid-rotor revival period T = 4*pi*I
// is
//   Pr_{m1,m2}(theta, t) =
//     sum_{J1,J2} <J1 m1|rho|J2 m2> Pt_J1^m1 Pt_J2^m2 exp(-i dw (t - t0)),
//   dw = (J1 - J2)(J1 + J2 + 1) / (2 I),
// so a Legendre projection in theta followed by a Fourier mode in t isolates
// small groups of elements that share the integer frequency
// q = (J1 - J2)(J1 + J2 + 1).  Each group forms a triangular linear system
// solved by back-substitution; groups of size one reduce to a division.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qtomo/grid.hpp"
#include "qtomo/legendre.hpp"

namespace qtomo {

struct BlockwiseProbability {
  // theta nodes/weights of `grid` carry the quadrature; phi is unused here.
  AngularGrid grid;
  TimeGrid times;
  double inertia_ps = 1.0;
  int j_max = 0;

  struct Entry {
    int m1 = 0;
    int m2 = 0;
    Eigen::MatrixXcd values;  // n_theta x n_t
  };
  std::vector<Entry> entries;

  const Eigen::MatrixXcd& at(int m1, int m2) const;
  Eigen::MatrixXcd& at(int m1, int m2);
  bool has(int m1, int m2) const;
};

// One recoverable element inside a frequency group.
struct ChainEntry {
  int J1 = 0;
  int J2 = 0;
};

// Result of a full block inversion.  `tail_truncated` is set when pairs just
// above j_max would have joined one of the solved frequency groups, i.e. the
// solution assumed a zero tail.
struct BlockInversion {
  Eigen::MatrixXcd coeffs;  // (J1 - |m1|, J2 - |m2|), sizes from j_max
  bool tail_truncated = false;
};

// Pr_{m1,m2}(theta, t) on the grid's theta nodes for the coefficient matrix
// `coeffs` indexed (J1-|m1|, J2-|m2|).  Time phases use the exact integer
// frequencies q/(2I) of a rigid rotor, with t0 of `times` as phase origin.
Eigen::MatrixXcd synthesize_block(const Eigen::MatrixXcd& coeffs, int m1,
                                  int m2, int j_max, const LegendreTable& leg,
                                  const TimeGrid& times);

// I_{m1m2}(alpha, t) = integral sin(theta) Pt_alpha^{m1+m2}(theta)
// Pr_{m1,m2}(theta, t) dtheta, evaluated with the grid's theta weights.
// With `enforce` set, throws when the grid cannot resolve order alpha
// (Gauss: alpha > n_theta - 1; midpoint: spacing above pi / (2 alpha)).
Eigen::VectorXcd project_theta(const Eigen::MatrixXcd& block_values,
                               const AngularGrid& grid,
                               const LegendreTable& leg, int alpha, int m1,
                               int m2, bool enforce = true);

// Discrete mean (1/N) sum_k I(t_k) exp(+i beta (alpha+1) (t_k - t0) / (2 I))
// over one revival period.  Requires the grid period to match 4*pi*I.  With
// `enforce` set, throws "aliasing" when |beta (alpha+1)| wraps the grid.
std::complex<double> time_fourier(const Eigen::VectorXcd& i_of_t,
                                  const TimeGrid& times, int alpha, int beta,
                                  double inertia_ps, bool enforce = true);

// All index pairs sharing the signed frequency q within the block bounds,
// ordered by decreasing J1+J2 (the back-substitution order).
std::vector<ChainEntry> factorization_chain(int q, int m1, int m2, int j_max);

// Element <J1 m1|rho|J2 m2> with J1 = (alpha+beta)/2, J2 = (alpha-beta)/2,
// valid only when that pair is the sole member of its frequency group.
// Throws "ambiguous factorization" otherwise (beta = 0 is never unique).
std::complex<double> solve_unique_factorization(
    const Eigen::MatrixXcd& block_values, const AngularGrid& grid,
    const LegendreTable& leg, const TimeGrid& times, double inertia_ps,
    int alpha, int beta, int m1, int m2, int j_max);

// Back-substitution over one frequency group.  `projected[i]` must hold the
// (alpha_i, beta_i) = (J1_i + J2_i, J1_i - J2_i) Fourier projection for
// chain[i].  Returns the elements in chain order; the reconstruction
// residual of the triangular system is checked below 1e-8.
Eigen::VectorXcd solve_triangular(const Eigen::VectorXcd& projected,
                                  const std::vector<ChainEntry>& chain, int m1,
                                  int m2);

// Full block recovery: projections for every frequency group, then the
// group solves.  `enforce` gates both grid guards; on top of the per-mode
// guard this rejects grids on which two distinct realizable frequency
// groups land on the same Fourier bin.
BlockInversion invert_block(const Eigen::MatrixXcd& block_values,
                            const AngularGrid& grid, const TimeGrid& times,
                            double inertia_ps, int m1, int m2, int j_max,
                            bool enforce = true);

BlockInversion invert_block(const BlockwiseProbability& blockwise, int m1,
                            int m2, bool enforce = true);

}  // namespace qtomo
