#pragma once

// Orientation-dependent molecular form factors, detector geometry, kernel
// assembly I = K Pr, and synthetic dataset generation with optional Poisson
// counting noise.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qtomo/grid.hpp"
#include "qtomo/rotor.hpp"

namespace qtomo {

enum class Probe { xray, electron };

// Sum-of-Gaussians atomic X-ray form factor
//   f(s) = sum_i a_i exp(-b_i (s / 4 pi)^2) + c,   s = |s| in 1/A,
// with f(0) = Z for a neutral atom.
struct ElementFormFactor {
  int z = 0;
  std::array<double, 4> a{};
  std::array<double, 4> b{};
  double c = 0.0;

  double xray(double s_invA) const;
};

class FormFactorTable {
 public:
  static FormFactorTable load(const std::string& path);

  const ElementFormFactor& at(int z) const;
  bool has(int z) const { return by_z_.count(z) != 0; }

 private:
  std::map<int, ElementFormFactor> by_z_;
};

struct Atom {
  int z = 0;                 // electron count N_alpha
  Eigen::Vector3d position;  // molecular frame, A
};

struct MoleculeGeometry {
  std::vector<Atom> atoms;

  static MoleculeGeometry homonuclear_diatomic(int z, double bond_length_A);
};

// Pixel list of scattering directions. The probe propagates along lab +x;
// the alignment axis is lab +z. A pixel at polar scattering angle Theta and
// azimuth Phi (measured around the beam from +y toward +z) receives momentum
// transfer
//   s = k [(cos Theta - 1), sin Theta cos Phi, sin Theta sin Phi],
// |s| = 2 k sin(Theta/2).
struct ScatteringGeometry {
  Probe probe = Probe::xray;
  double probe_energy_keV = 0.0;
  Eigen::VectorXd pixel_theta;  // scattering angle per pixel, rad
  Eigen::VectorXd pixel_phi;    // detector azimuth per pixel, rad
  std::vector<std::uint8_t> active;  // beam-stop mask, 1 = used

  int n_pixels() const { return static_cast<int>(pixel_theta.size()); }
  int n_active() const;
  double wavenumber_invA() const;  // k = 2 pi / lambda
  Eigen::Vector3d s_vector(int pixel) const;
  double s_magnitude(int pixel) const;

  // Product grid of n_theta scattering angles (uniform in (0, theta_max])
  // and n_phi azimuths (uniform over [0, 2 pi)), azimuth fastest.
  static ScatteringGeometry polar_detector(Probe probe, double energy_keV,
                                           int n_theta, double theta_max_rad,
                                           int n_phi);
  // Flat square detector of n_side x n_side pixels at unit distance spanning
  // +/- half_span (tangent units) in both transverse directions.
  static ScatteringGeometry flat_square_detector(Probe probe,
                                                 double energy_keV, int n_side,
                                                 double half_span);
};

// Coherent molecular form factor for one orientation of the molecule.
// The orientation rotates molecular-frame positions by R_z(phi) R_y(theta)
// (enough detail for linear molecules; no third Euler angle is sampled).
// Electron probe uses f_e = sum_a (N_a - f_a(s)) e^{i s.R_a} / s^2 and
// throws "singular s=0" at zero momentum transfer.
std::complex<double> molecular_form_factor(const MoleculeGeometry& mol,
                                           const FormFactorTable& table,
                                           Probe probe,
                                           const Eigen::Vector3d& s_vec,
                                           double theta, double phi);

struct KernelMatrix {
  // rows: active detector pixels in pixel order; cols: orientation cells,
  // theta fastest within phi (matching AngularDistribution::flattened).
  Eigen::MatrixXd k;
  std::vector<int> pixel_of_row;  // row -> pixel index in the geometry
};

// Entries |f(theta_j, phi_i; pixel)|^2 w_phi_i w_theta_j. Throws with an
// explicit size report when rows x cols exceeds max_entries.
KernelMatrix build_kernel(const MoleculeGeometry& mol,
                          const FormFactorTable& table,
                          const ScatteringGeometry& geometry,
                          const AngularGrid& grid,
                          std::size_t max_entries = 80000000);

struct NoiseBudget {
  double photons_per_frame = 0.0;  // expected total counts in a frame
  std::uint64_t seed = 0;
};

struct DiffractionDataset {
  ScatteringGeometry geometry;
  TimeGrid times;
  std::vector<Eigen::VectorXd> frames;  // one value per kernel row
  std::optional<NoiseBudget> noise;
  double intensity_scale = 1.0;  // counts per unit forward intensity
};

// I(t_k) = K Pr(t_k); exactly linear in the distribution.
DiffractionDataset forward_intensity(const KernelMatrix& kernel,
                                     const ScatteringGeometry& geometry,
                                     const AngularDistribution& distribution);

// Full forward simulation from a density matrix. With a noise budget, frame
// intensities are scaled so the mean frame totals the photon budget, then
// each pixel is Poisson-sampled with a deterministic seeded generator.
DiffractionDataset simulate_dataset(const RotationalDensityMatrix& rho,
                                    const RotorSpec& spec,
                                    const MoleculeGeometry& mol,
                                    const FormFactorTable& table,
                                    const ScatteringGeometry& geometry,
                                    const AngularGrid& grid,
                                    const TimeGrid& times,
                                    const std::optional<NoiseBudget>& noise =
                                        std::nullopt);

}  // namespace qtomo
