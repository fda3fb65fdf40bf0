#pragma once

#include <Eigen/Dense>

namespace qtomo {

enum class ThetaScheme { gauss, riemann };

// Orientation quadrature grid. Polar integrals run in tau = -cos(theta), so
// the theta weights sum to 2 and the uniform phi weights sum to 2*pi.
// Gauss-Legendre nodes in tau are the default; the midpoint (Riemann) scheme
// is kept for cross-checks against plain cell-sum discretizations.
struct AngularGrid {
  Eigen::VectorXd theta;    // strictly increasing, inside (0, pi)
  Eigen::VectorXd w_theta;  // quadrature weights in the tau measure
  Eigen::VectorXd phi;      // uniform on [0, 2*pi)
  Eigen::VectorXd w_phi;
  ThetaScheme scheme = ThetaScheme::gauss;

  int n_theta() const { return static_cast<int>(theta.size()); }
  int n_phi() const { return static_cast<int>(phi.size()); }

  // Largest node spacing in theta; used for the resolution bound delta_theta.
  double max_theta_spacing() const;

  static AngularGrid make(int n_theta, int n_phi,
                          ThetaScheme scheme = ThetaScheme::gauss);
};

// Gauss-Legendre rule on [-1, 1]. Nodes ascending.
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

// Uniform time grid covering exactly one period [t0, t0 + period).
struct TimeGrid {
  double t0_ps = 0.0;
  double period_ps = 0.0;
  int n = 0;

  double dt() const { return period_ps / n; }
  double time(int k) const { return t0_ps + period_ps * k / n; }
  Eigen::VectorXd times() const;
};

}  // namespace qtomo
