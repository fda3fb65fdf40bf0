#pragma once

// Single-mode phase-space maps. Conventions: W normalized so that the full
// integral of W over (q, p) is 1 and overlaps obey
// Tr[A B] = 2 pi * integral(W_A W_B); the ground state maps to
// (1/pi) exp(-q^2 - p^2).

#include <Eigen/Dense>

namespace qtomo {

struct PhaseSpaceGrid {
  Eigen::VectorXd q;
  Eigen::VectorXd p;

  static PhaseSpaceGrid square(double half_span, int n_points);
  double dq() const;
  double dp() const;
};

// Wigner map of the (generally non-Hermitian) operator |m><n|; rows index q,
// columns index p.
Eigen::MatrixXcd wigner_of_projector(int m, int n, const PhaseSpaceGrid& grid);

// Real Wigner map of a Hermitian Fock-basis density matrix.
Eigen::MatrixXd wigner_from_density(const Eigen::MatrixXcd& rho,
                                    const PhaseSpaceGrid& grid);

// Overlap inversion; the grid must cover the classical box for n_max plus a
// four-unit margin in both q and p.
Eigen::MatrixXcd density_from_wigner(const Eigen::MatrixXd& w, int n_max,
                                     const PhaseSpaceGrid& grid);

double wigner_integral(const Eigen::MatrixXd& w, const PhaseSpaceGrid& grid);

// Position probability density: the p-integral at each q node.
Eigen::VectorXd wigner_position_marginal(const Eigen::MatrixXd& w,
                                         const PhaseSpaceGrid& grid);

}  // namespace qtomo
