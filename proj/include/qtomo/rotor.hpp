#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qtomo/grid.hpp"
#include "qtomo/legendre.hpp"

namespace qtomo {

// Linear rotor parameters. Energies are E_J = B J(J+1) - D [J(J+1)]^2 in
// rad/ps with hbar = 1; B = 1/(2 I). The rotational constant always comes
// from user configuration.
struct RotorSpec {
  double rotational_constant_radps = 0.0;
  double centrifugal_distortion_radps = 0.0;
  double alpha_parallel_A3 = 0.0;  // polarizability volumes
  double alpha_perp_A3 = 0.0;
  double spin_weight_even = 1.0;   // nuclear-spin degeneracy per J parity
  double spin_weight_odd = 1.0;
  double temperature_K = 0.0;

  double inertia_ps() const { return 0.5 / rotational_constant_radps; }
  double revival_period_ps() const;  // T = 4 pi I
  double energy(int J) const {
    const double x = static_cast<double>(J) * (J + 1);
    return rotational_constant_radps * x - centrifugal_distortion_radps * x * x;
  }
  double spin_weight(int J) const {
    return (J % 2 == 0) ? spin_weight_even : spin_weight_odd;
  }
};

// Cycle-averaged squared field envelope of the alignment pulse. The envelope
// is Gaussian in intensity with the given FWHM; coupling to the rotor is
// -(1/2) eps^2(t) [(a_par - a_perp) cos^2(theta) + a_perp].
struct LaserPulse {
  double peak_intensity_Wcm2 = 0.0;
  double fwhm_fs = 0.0;
  double center_ps = 0.0;

  double envelope(double t_ps) const;  // relative intensity in [0, 1]
  // Interaction strength (1/2) eps^2(t) * alpha in rad/ps for a
  // polarizability volume alpha (A^3).
  double coupling_radps(double t_ps, double alpha_A3) const;
  double sigma_ps() const;
};

// Boltzmann occupancies omega_J0 including nuclear-spin weights; each of the
// 2J0+1 m0 sublevels carries omega_J0, so sum_J0 (2J0+1) omega_J0 = 1.
struct ThermalWeights {
  std::vector<double> omega;  // indexed by J0

  int j_max() const { return static_cast<int>(omega.size()) - 1; }
  double trace() const;
};

// Throws "j_max too small" when the truncated Boltzmann tail exceeds
// tail_tolerance of the trace. Weights are renormalized over the kept shells.
ThermalWeights thermal_weights(const RotorSpec& spec, int j_max,
                               double tail_tolerance = 1e-6);

// Density matrix of a linear rotor driven by a linearly polarized field:
// block diagonal in m (Delta-m coherences are structurally zero), blocks over
// J = |m| .. j_max. Element phases are anchored at reference_time_ps.
struct RotationalDensityMatrix {
  int j_max = -1;
  double reference_time_ps = 0.0;
  std::vector<Eigen::MatrixXcd> blocks;  // index m + j_max, m in [-j_max, j_max]

  static RotationalDensityMatrix zero(int j_max);
  int block_dim(int m) const { return j_max - std::abs(m) + 1; }
  Eigen::MatrixXcd& block(int m) { return blocks[m + j_max]; }
  const Eigen::MatrixXcd& block(int m) const { return blocks[m + j_max]; }
  // <J1 m|rho|J2 m>; J indices are absolute.
  std::complex<double>& element(int J1, int J2, int m);
  std::complex<double> element(int J1, int J2, int m) const;
  double trace() const;
  double abs_sum() const;
  void hermitize();
  // Projection onto a smaller basis order, trace renormalized.
  RotationalDensityMatrix truncated(int new_j_max) const;
};

RotationalDensityMatrix thermal_density(const RotorSpec& spec, int j_max,
                                        double tail_tolerance = 1e-6);

// Diagonal incoherent state from the given occupancies, restricted to j_max
// and trace renormalized. Accepts weights computed on a larger basis, which
// sidesteps the tail check when the target order is deliberately small.
RotationalDensityMatrix incoherent_density(const ThermalWeights& weights,
                                           int j_max);

// Pendular-state expansion coefficients d_J^{(J0 m0)} after the pulse, in the
// interaction picture (free phases removed). The pulse couples J to J +/- 2,
// so each (J0, m0) ladder keeps the parity of J0. Coefficients for -m0 equal
// those for +m0.
class PendularCoefficients {
 public:
  PendularCoefficients() = default;
  PendularCoefficients(int j_max);

  int j_max() const { return j_max_; }
  // d_J for the ladder starting from |J0 m0>; zero for parity-mismatched or
  // out-of-range J.
  std::complex<double> d(int J0, int m0, int J) const;
  std::complex<double>& d_ref(int J0, int m0, int J);

 private:
  int j_max_ = -1;
  std::vector<Eigen::VectorXcd> ladders_;  // index (J0, |m0|)
  int idx(int J0, int m0) const;
};

struct PropagationOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double span_sigmas = 4.0;   // integration window around the pulse center
  double norm_tol = 1e-8;     // allowed drift of each ladder norm
  bool check_top_shell = true;
  double top_shell_tol = 1e-4;  // post-pulse mass allowed in top two shells
};

// Integrates i d'/dt = H_eff(t) d in the interaction picture with an
// adaptive Dormand-Prince 5(4) stepper for every thermally populated
// (J0, m0). Throws "step tolerance too coarse" on norm drift and
// "basis truncation too tight" when the top two shells end up with more
// population than allowed.
PendularCoefficients propagate_alignment(const RotorSpec& spec,
                                         const LaserPulse& pulse, int j_max,
                                         const ThermalWeights& weights,
                                         const PropagationOptions& opt = {});

// rho(t) = sum_J0m0 omega_J0 d_J1 d_J2^* e^{-i (E_J1 - E_J2) t}.
RotationalDensityMatrix density_from_pendular(const PendularCoefficients& d,
                                              const ThermalWeights& weights,
                                              const RotorSpec& spec,
                                              double t_ps);

// Orientation probability movie Pr(theta, phi, t) on an angular grid.
// frames[k] is (n_phi x n_theta); each frame integrates to 1 over the sphere.
struct AngularDistribution {
  AngularGrid grid;
  TimeGrid times;
  std::vector<Eigen::MatrixXd> frames;

  double integral(int k) const;
  void normalize();
  // Vectorization used by the diffraction kernel: theta fastest within phi.
  Eigen::VectorXd flattened(int k) const;
  static AngularDistribution from_flattened(const AngularGrid&,
                                            const TimeGrid&,
                                            const std::vector<Eigen::VectorXd>&);
};

// Pr(theta, phi, t_k) synthesized from the density matrix propagated freely
// from its reference time; phases advance as e^{-i Delta-omega (t - t_ref)}.
AngularDistribution synthesize_probability(const RotationalDensityMatrix& rho,
                                           const RotorSpec& spec,
                                           const AngularGrid& grid,
                                           const TimeGrid& times);

// Tr[rho cos^2(theta)] via the closed-form matrix elements.
double cos2_expectation(const RotationalDensityMatrix& rho);

// Quadrature route for the same expectation value, used as a cross-check.
double cos2_expectation_quadrature(const AngularDistribution& pr, int frame);

// Partial trace over one (m, J-parity) class: sum_{J in class} <J m|rho|J m>.
double partial_trace(const RotationalDensityMatrix& rho, int m, int parity);

}  // namespace qtomo
