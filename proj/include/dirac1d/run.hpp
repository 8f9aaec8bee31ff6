#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dirac1d/config.hpp"
#include "dirac1d/peaks.hpp"

namespace dirac1d {

std::string_view version() noexcept;

struct OutputFile {
  std::string name;    ///< relative to the output directory
  std::string sha256;  ///< lower-case hex
  std::size_t bytes = 0;
};

struct RunManifest {
  std::map<std::string, std::string> config;
  std::string tool_version;
  double wall_seconds = 0.0;
  std::vector<OutputFile> outputs;
};

/// Which artifacts a run emits.
enum class RunMode {
  simulate,   ///< everything enabled in the config
  decompose,  ///< momentum CSV only
  spacetime,  ///< raster only
};

/// Produces the requested files in `out_dir` (created if missing) and writes
/// manifest.json beside them. Outputs other than the manifest are
/// byte-identical for equal configs.
RunManifest run_simulation(const RunConfig& cfg, const std::filesystem::path& out_dir,
                           RunMode mode = RunMode::simulate);

/// Samples density snapshots over [peaks.t_start, peaks.t_end] every
/// peaks.dt and tracks the maxima in the peaks window.
PeakTrackResult run_peak_tracking(const RunConfig& cfg);

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace dirac1d
