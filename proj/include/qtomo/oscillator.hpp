#pragma once

// Harmonic-oscillator wavefunctions in dimensionless units (H = (p^2+x^2)/2,
// eigenvalue n + 1/2) and the sampling (pattern) functions
// f_mn = d/dx [phi_m(x) vphi_n(x)] built from the regular solution phi_n and
// the irregular second solution vphi_n at the same eigenvalue.
//
// vphi_n is fixed uniquely by parity (opposite to phi_n, which removes the
// phi_n admixture freedom) and by the Wronskian phi_n vphi_n' - phi_n' vphi_n
// = 2. That scale is what makes the pattern functions bi-orthogonal:
//   int f_mn phi_m' phi_n' dx = delta_mm' delta_nn'  when m - n = m' - n'.

#include <vector>

#include <Eigen/Dense>

namespace qtomo {

// Uniform symmetric grid with an odd point count (x = 0 is a node).
Eigen::VectorXd oscillator_grid(double half_span, int n_points);

// Nodal-resolution bound on the grid spacing for orders up to n_max.
double oscillator_dx_bound(int n_max);

// Uniform/symmetric/odd-count geometry always required; span and spacing
// bounds for order n only when enforce is set.
void validate_oscillator_grid(int n, const Eigen::VectorXd& x, bool enforce);

// Single-point evaluation, no grid requirements (used for phase-space maps).
double regular_wavefunction_at(int n, double x);

// Grid-taking overloads require a uniform symmetric grid with an odd point
// count. With enforce set they additionally require the span to reach the
// classical turning point + 5 units and the spacing to stay within the n-th
// order nodal bound; violations throw.
Eigen::VectorXd regular_wavefunction(int n, const Eigen::VectorXd& x,
                                     bool enforce = true);
Eigen::VectorXd regular_wavefunction_derivative(int n, const Eigen::VectorXd& x,
                                                bool enforce = true);
Eigen::VectorXd irregular_wavefunction(int n, const Eigen::VectorXd& x,
                                       bool enforce = true);
void irregular_pair(int n, const Eigen::VectorXd& x, Eigen::VectorXd* value,
                    Eigen::VectorXd* derivative, bool enforce = true);

Eigen::VectorXd pattern_function(int m, int n, const Eigen::VectorXd& x,
                                 bool enforce = true);

class PatternFunctionTable {
 public:
  PatternFunctionTable() = default;
  PatternFunctionTable(int n_max, const Eigen::VectorXd& x,
                       bool enforce = true);

  int n_max() const { return n_max_; }
  const Eigen::VectorXd& x() const { return x_; }
  const Eigen::VectorXd& at(int m, int n) const;

 private:
  int n_max_ = -1;
  Eigen::VectorXd x_;
  std::vector<Eigen::VectorXd> f_;
};

}  // namespace qtomo
