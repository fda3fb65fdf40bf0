#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qtomo/grid.hpp"

namespace qtomo {

// Normalized associated Legendre functions
//   Pt_J^m(x) = (-1)^m sqrt((2J+1)(J-m)!/(2 (J+m)!)) P_J^m(x),
// with the Condon-Shortley phase carried by the (-1)^m factor, so that
// Y_Jm = Pt_J^m(cos theta) e^{i m phi} / sqrt(2 pi) are standard spherical
// harmonics. Orthonormal: int_0^pi Pt_J1^m Pt_J2^m sin(theta) dtheta = d_J1J2.
//
// Values are tabulated on a fixed set of x = cos(theta) nodes for all
// J <= j_max and -J <= m <= J, built by the stable normalized three-term
// recurrence in J.
class LegendreTable {
 public:
  LegendreTable() = default;
  LegendreTable(int j_max, const Eigen::VectorXd& x);

  int j_max() const { return j_max_; }
  int n_nodes() const { return static_cast<int>(x_.size()); }
  const Eigen::VectorXd& x() const { return x_; }

  // Values over the nodes; valid for |m| <= J <= j_max.
  const Eigen::VectorXd& at(int J, int m) const;

 private:
  int j_max_ = -1;
  Eigen::VectorXd x_;
  std::vector<Eigen::VectorXd> vals_;  // index J*J + (m + J)
};

// Table over the theta nodes of an angular grid (x = cos theta).
LegendreTable evaluate_legendre(int j_max, const AngularGrid& grid);

// Single-point evaluation, used by tests and small closed-form checks.
double normalized_legendre(int J, int m, double x);

}  // namespace qtomo
