#pragma once

#include <span>
#include <vector>

#include "dirac1d/observables.hpp"

namespace dirac1d {

struct PeakTrack {
  std::vector<double> times;
  std::vector<double> positions;
  double speed = 0.0;  ///< least-squares slope; set for tracks with >= 3 points
};

struct PeakTrackResult {
  std::vector<PeakTrack> tracks;  ///< every track with at least three points
  double fitted_speed = 0.0;      ///< median of the track speeds
};

/// Strict local maxima of rho inside [x_lo, x_hi], refined by a three-point
/// parabola through the sample and its neighbours.
std::vector<double> local_maxima(const DensityProfile& profile, double x_lo, double x_hi);

/// Follows density maxima through consecutive snapshots. Each peak is linked
/// to the nearest maximum of the next frame; a track ends when no maximum
/// lies within half the peak spacing. Two candidates within half the
/// spacing is an ambiguity and throws TrackingError, as does a frame
/// without maxima or a result without any track of three points.
/// Needs >= 3 snapshots on one grid with ascending times (ArgumentError).
PeakTrackResult track_peaks(std::span<const DensityProfile> snapshots, double x_lo, double x_hi);

}  // namespace dirac1d
