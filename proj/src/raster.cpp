#include "dirac1d/raster.hpp"

#include <algorithm>
#include <fstream>

namespace dirac1d {
namespace {

// Linear interpolation of the sampled density at x (grid ascending in x).
double interpolate(const DensityProfile& profile, double x) {
  const Grid& grid = profile.grid();
  const double u = (x - grid.position(0)) / grid.dx();
  const double j0 = std::floor(u);
  const auto i = static_cast<std::size_t>(std::clamp(j0, 0.0, static_cast<double>(grid.size() - 2)));
  const double frac = std::clamp(u - static_cast<double>(i), 0.0, 1.0);
  return (1.0 - frac) * profile[i] + frac * profile[i + 1];
}

}  // namespace

std::size_t raster_column(const RasterWindow& window, double x) noexcept {
  const double u = (x - window.x_lo) / (window.x_hi - window.x_lo) * static_cast<double>(window.width) - 0.5;
  const double c = std::clamp(std::round(u), 0.0, static_cast<double>(window.width - 1));
  return static_cast<std::size_t>(c);
}

Image render_spacetime(std::span<const DensityProfile> rows, std::span<const double> worldline,
                       const RasterWindow& window) {
  if (rows.size() < 2) throw ArgumentError("spacetime raster needs at least two frames");
  if (worldline.size() != rows.size()) throw ArgumentError("worldline length must match frame count");
  if (window.width == 0 || !(window.x_lo < window.x_hi)) throw ArgumentError("degenerate raster window");
  const Grid& grid = rows[0].grid();
  if (window.x_lo < grid.position(0) || window.x_hi > grid.position(grid.size() - 1)) {
    throw ArgumentError("raster window exceeds the grid");
  }

  const std::size_t width = window.width;
  const double pixel = (window.x_hi - window.x_lo) / static_cast<double>(width);
  std::vector<double> values(rows.size() * width);
  double peak = 0.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      const double v = interpolate(rows[r], window.x_lo + (static_cast<double>(c) + 0.5) * pixel);
      values[r * width + c] = v;
      peak = std::max(peak, v);
    }
  }

  Image image{width, rows.size(), std::vector<std::uint8_t>(3 * width * rows.size(), 0)};
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double level = peak > 0.0 ? values[i] / peak * kDensityGrayMax : 0.0;
    const auto gray = static_cast<std::uint8_t>(std::clamp(std::round(level), 0.0, double{kDensityGrayMax}));
    std::fill_n(image.rgb.begin() + static_cast<std::ptrdiff_t>(3 * i), 3, gray);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t c = raster_column(window, worldline[r]);
    std::fill_n(image.rgb.begin() + static_cast<std::ptrdiff_t>(3 * (r * width + c)), 3, std::uint8_t{255});
  }
  return image;
}

void write_ppm(const Image& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.rgb.data()), static_cast<std::streamsize>(image.rgb.size()));
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_spacetime_raster(std::span<const DensityProfile> rows, std::span<const double> worldline,
                            const RasterWindow& window, const std::filesystem::path& path) {
  write_ppm(render_spacetime(rows, worldline, window), path);
}

}  // namespace dirac1d
