#pragma once

// Dataset and density-matrix persistence. Every artifact is a JSON manifest
// next to raw little-endian float64 blocks; manifests carry SHA-256 digests
// of the blocks and loads verify them. Numeric data never passes through
// text, so a fixed seed reproduces files bit for bit.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtomo/diffraction.hpp"
#include "qtomo/rotor.hpp"
#include "qtomo/vibrational.hpp"

namespace qtomo {

std::string sha256_bytes(const void* data, size_t count);
std::string sha256_file(const std::filesystem::path& path);

void write_double_block(const std::filesystem::path& path,
                        const std::vector<double>& values);
std::vector<double> read_double_block(const std::filesystem::path& path);

// Diffraction dataset: manifest.json + frames.bin (frame-major pixels).
void save_dataset(const std::filesystem::path& dir,
                  const DiffractionDataset& dataset,
                  const nlohmann::json& provenance);
DiffractionDataset load_dataset(const std::filesystem::path& dir);

// Angular probability movie: manifest.json + frames.bin, each frame stored
// flattened with theta fastest within phi.
void save_movie(const std::filesystem::path& dir,
                const AngularDistribution& movie,
                const nlohmann::json& provenance);
AngularDistribution load_movie(const std::filesystem::path& dir);

// Vibrational probability movie over the flattened product grid.
struct VibMovie {
  OscillatorBasis basis;
  VibTimeGrid times;
  std::vector<Eigen::VectorXd> frames;
};
void save_vib_movie(const std::filesystem::path& dir, const VibMovie& movie,
                    const nlohmann::json& provenance);
VibMovie load_vib_movie(const std::filesystem::path& dir);

// Rotational density matrix: <stem>.json manifest plus <stem>.bin holding
// interleaved re/im float64 per m-block with an index table.
void save_rotational_density(const std::filesystem::path& json_path,
                             const RotationalDensityMatrix& rho,
                             const nlohmann::json& provenance);
RotationalDensityMatrix load_rotational_density(
    const std::filesystem::path& json_path);

void save_vib_density(const std::filesystem::path& json_path,
                      const OscillatorBasis& basis,
                      const VibrationalDensityMatrix& rho,
                      const nlohmann::json& provenance);
struct VibDensityFile {
  OscillatorBasis basis;
  VibrationalDensityMatrix rho;
};
VibDensityFile load_vib_density(const std::filesystem::path& json_path);

// One header row (fields carry units in their names), then data rows.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Digest + schema verification of any artifact written by the savers above.
// Returns human-readable report lines; throws on failure.
std::vector<std::string> validate_artifact(const std::filesystem::path& path);

}  // namespace qtomo
