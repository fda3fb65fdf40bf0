#pragma once

// Pipeline configuration shared by every CLI subcommand. Field names carry
// their units. JSON round-trips through config_to_json/apply_config_json;
// unknown keys are rejected with the full field path so typos surface as
// validation failures instead of silently keeping defaults.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtomo/diffraction.hpp"
#include "qtomo/rotor.hpp"
#include "qtomo/vibrational.hpp"

namespace qtomo {

struct PipelineConfig {
  struct Molecule {
    std::string name = "N2";
    int atomic_number = 7;
    double bond_length_A = 1.0977;
  } molecule;

  struct Rotor {
    double rotational_constant_invcm = 1.98958;
    double centrifugal_distortion_invcm = 0.0;
    double alpha_parallel_A3 = 2.38;
    double alpha_perp_A3 = 1.45;
    double spin_weight_even = 6.0;
    double spin_weight_odd = 3.0;
    double temperature_K = 30.0;
    double tail_tolerance = 1e-6;
  } rotor;

  struct Pulse {
    double peak_intensity_Wcm2 = 1e13;
    double fwhm_fs = 50.0;
    double center_ps = 0.0;
  } pulse;

  struct Grids {
    int j_max = 8;       // reconstruction basis order
    int j_max_sim = 12;  // simulation basis order (thermal tail must fit)
    int n_theta = 64;
    int n_phi = 32;
    int n_time = 145;
    std::string theta_scheme = "gauss";  // gauss | riemann
    double window_start_ps = 0.5;        // movie start after the pulse
  } grids;

  struct Detector {
    std::string probe = "electron";  // electron | xray
    double energy_keV = 20.0;
    int n_theta = 24;
    double theta_max_rad = 0.16;
    int n_phi = 16;
  } detector;

  struct Noise {
    double photons_per_frame = 0.0;  // 0 disables counting noise
    std::uint64_t seed = 777;
  } noise;

  struct Inversion {
    double lambda = 1.0e4;
    double lambda_lo = 1.0;
    double lambda_hi = 1.0e8;
    int lambda_count = 33;
    int condition_trials = 0;
    int frame_index = 0;  // frame used for the L-curve scan
  } inversion;

  struct Qt {
    int max_iterations = 50;
    int probability_passes = 8;
    double plateau_rel_change = 1e-6;
    int plateau_window = 5;
    double divergence_factor = 10.0;
    bool enforce_grids = true;
    double hio_beta = 0.9;
    std::uint64_t seed = 20260814;
  } qt;

  struct Vib {
    double base_frequency_invcm = 1209.8;
    std::vector<int> ratios{1, 3};
    std::vector<double> masses_amu{12.0, 12.0};
    std::vector<int> n_max{2, 2};
    double grid_half_span = 0.0;  // 0 selects the span bound automatically
    int grid_points = 0;          // 0 selects the spacing bound automatically
    int n_time = 0;               // 0 selects the sampling bound automatically
    int max_iterations = 30;
    std::uint64_t seed = 20260814;
    bool enforce_grids = true;
    bool diagonal_from_reference = false;
  } vib;

  std::string output_dir = "qtomo-out";
  std::string form_factor_path;  // empty selects the bundled table

  RotorSpec rotor_spec() const;
  LaserPulse laser_pulse() const;
  AngularGrid angular_grid() const;
  TimeGrid movie_times() const;  // one revival period from window_start_ps
  ScatteringGeometry detector_geometry() const;
  MoleculeGeometry molecule_geometry() const;
  std::string resolved_form_factor_path() const;
  OscillatorBasis oscillator_basis() const;
  VibTimeGrid vib_times() const;  // one fundamental period from t = 0
};

// Overwrites the fields present in `j`, leaving the rest untouched. Throws
// ValidationError naming the offending path for unknown keys or wrong types.
void apply_config_json(PipelineConfig& config, const nlohmann::json& j);

// Full canonical form containing every field.
nlohmann::json config_to_json(const PipelineConfig& config);

// Defaults overlaid with the file contents.
PipelineConfig load_config(const std::filesystem::path& path);

}  // namespace qtomo
