#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dirac1d/wavepackets.hpp"

namespace dirac1d {

/// Everything a run needs. Text form is one `section.key = value` per line,
/// `#` starts a comment:
///
///   grid.n, grid.l
///   packet.kind, packet.a, packet.x0, packet.q, packet.w1, packet.w2,
///   packet.p0, packet.b
///   time.t_max, time.frames
///   output.observables, output.snapshots, output.momentum, output.spacetime,
///   output.snapshot_stride
///   raster.width, raster.height, raster.x_window  (LO:HI)
///   peaks.t_start, peaks.t_end, peaks.dt, peaks.window  (LO:HI)
struct RunConfig {
  std::size_t grid_n = 2048;
  double grid_l = 128.0;

  PacketSpec packet{};

  double t_max = 50.0;
  std::size_t frames = 256;

  bool write_observables = true;
  bool write_snapshots = false;
  bool write_momentum = true;
  bool write_spacetime = true;
  std::size_t snapshot_stride = 64;

  std::size_t raster_width = 512;
  std::size_t raster_height = 256;
  double raster_x_lo = -64.0;
  double raster_x_hi = 64.0;

  double peaks_t_start = 0.0;
  double peaks_t_end = -1.0;  ///< negative: use t_max
  double peaks_dt = 0.1;
  double peaks_x_lo = -8.0;
  double peaks_x_hi = 8.0;

  /// key -> value text as finally applied, for the run manifest.
  std::map<std::string, std::string> echo;
};

/// Parses config text on top of the defaults. `overrides` are extra
/// `key=value` assignments applied after the file. Throws ConfigError
/// naming the offending line (0 for overrides and cross-field checks
/// without a source line).
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

/// Reads a file and parses it. IoError if unreadable.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// Parses "LO:HI" into a window; ConfigError unless LO < HI, both finite.
std::pair<double, double> parse_window(std::string_view text);

}  // namespace dirac1d
