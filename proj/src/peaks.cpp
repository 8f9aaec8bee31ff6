#include "dirac1d/peaks.hpp"

#include <algorithm>

namespace dirac1d {
namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<double> local_maxima(const DensityProfile& profile, double x_lo, double x_hi) {
  const Grid& grid = profile.grid();
  std::vector<double> peaks;
  for (std::size_t j = 1; j + 1 < grid.size(); ++j) {
    const double x = grid.position(j);
    if (x < x_lo || x > x_hi) continue;
    const double left = profile[j - 1], mid = profile[j], right = profile[j + 1];
    if (!(mid > left && mid > right)) continue;
    const double curvature = left - 2.0 * mid + right;
    const double offset = 0.5 * (left - right) / curvature;
    peaks.push_back(x + offset * grid.dx());
  }
  return peaks;
}

PeakTrackResult track_peaks(std::span<const DensityProfile> snapshots, double x_lo, double x_hi) {
  if (snapshots.size() < 3) throw ArgumentError("track_peaks: need at least three snapshots");
  if (!(x_lo < x_hi)) throw ArgumentError("track_peaks: empty window");
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    if (!(snapshots[i].grid() == snapshots[0].grid())) throw DimensionError("track_peaks: grid mismatch");
    if (!(snapshots[i].time() > snapshots[i - 1].time())) {
      throw ArgumentError("track_peaks: snapshot times must ascend");
    }
  }

  std::vector<std::vector<double>> frames;
  frames.reserve(snapshots.size());
  std::vector<double> gaps;
  for (const auto& s : snapshots) {
    frames.push_back(local_maxima(s, x_lo, x_hi));
    if (frames.back().empty()) {
      throw TrackingError("track_peaks: no maxima in window at t = " + std::to_string(s.time()));
    }
    for (std::size_t k = 1; k < frames.back().size(); ++k) gaps.push_back(frames.back()[k] - frames.back()[k - 1]);
  }
  const double spacing = gaps.empty() ? x_hi - x_lo : median(gaps);
  const double reach = 0.5 * spacing;

  std::vector<PeakTrack> active, finished;
  for (double x : frames[0]) active.push_back({{snapshots[0].time()}, {x}, 0.0});

  for (std::size_t i = 1; i < frames.size(); ++i) {
    const double t = snapshots[i].time();
    std::vector<bool> claimed(frames[i].size(), false);
    std::vector<PeakTrack> next;
    for (auto& track : active) {
      const double last = track.positions.back();
      std::size_t found = frames[i].size();
      int count = 0;
      for (std::size_t k = 0; k < frames[i].size(); ++k) {
        if (std::abs(frames[i][k] - last) < reach) {
          ++count;
          found = k;
        }
      }
      if (count == 0) {
        finished.push_back(std::move(track));
        continue;
      }
      if (count > 1 || claimed[found]) {
        throw TrackingError("track_peaks: ambiguous association near x = " + std::to_string(last) +
                            " at t = " + std::to_string(t));
      }
      claimed[found] = true;
      track.times.push_back(t);
      track.positions.push_back(frames[i][found]);
      next.push_back(std::move(track));
    }
    for (std::size_t k = 0; k < frames[i].size(); ++k) {
      if (!claimed[k]) next.push_back({{t}, {frames[i][k]}, 0.0});
    }
    active = std::move(next);
  }
  for (auto& track : active) finished.push_back(std::move(track));

  PeakTrackResult result;
  std::vector<double> speeds;
  for (auto& track : finished) {
    if (track.positions.size() < 3) continue;
    track.speed = fit_line(track.times, track.positions).slope;
    speeds.push_back(track.speed);
    result.tracks.push_back(std::move(track));
  }
  if (result.tracks.empty()) throw TrackingError("track_peaks: no peak persisted for three frames");
  std::sort(result.tracks.begin(), result.tracks.end(),
            [](const PeakTrack& a, const PeakTrack& b) { return a.positions.front() < b.positions.front(); });
  result.fitted_speed = median(std::move(speeds));
  return result;
}

}  // namespace dirac1d
