#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "actcode/action.hpp"

namespace actcode {

enum class AngleUnit { Degrees, Radians };

std::string_view to_string(AngleUnit unit) noexcept;

struct ManifestEntry {
  std::string path;  // relative to the manifest's directory
  std::string class_label;
  std::string subject_id;
  std::string action_id;
  double frame_rate = 0.0;
  AngleUnit angle_unit = AngleUnit::Degrees;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// JSON on disk:
///   {"dataset_name": str,
///    "entries": [{"path", "class_label", "subject_id", "action_id",
///                 "frame_rate", "angle_unit": "deg"|"rad"}, ...]}
struct DatasetManifest {
  std::string dataset_name;
  std::vector<ManifestEntry> entries;

  friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

/// Parses and validates manifest JSON text (unique action ids, positive
/// frame rates). `origin` names the source in error messages.
DatasetManifest parse_manifest(std::string_view json_text, const std::string& origin = "manifest");
DatasetManifest read_manifest(const std::filesystem::path& path);
std::string manifest_to_json(const DatasetManifest& manifest);

/// Reads one action CSV: comma separated decimals, LF or CRLF line ends,
/// optional header row (detected when the first row is not numeric).
/// Errors name the file and line.
Eigen::MatrixXd read_action_csv(const std::filesystem::path& path);

/// Writes samples with shortest round-trip formatting, one frame per row.
void write_action_csv(const std::filesystem::path& path, const Eigen::MatrixXd& samples);

/// Loads every manifest entry in manifest order. Radian files are converted
/// to degrees. All actions must share the same joint count.
std::vector<ActionMatrix> load_dataset(const std::filesystem::path& manifest_path);

/// Writes `actions/<action_id>.csv` files (degrees) and `manifest.json` into
/// `directory`, creating it if needed. Returns the manifest path.
std::filesystem::path write_dataset(const std::filesystem::path& directory, const std::string& dataset_name,
                                    const std::vector<ActionMatrix>& actions);

}  // namespace actcode
