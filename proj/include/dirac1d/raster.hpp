#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "dirac1d/observables.hpp"

namespace dirac1d {

/// 8-bit RGB image, row major, top row first.
struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> rgb;

  const std::uint8_t* pixel(std::size_t row, std::size_t col) const noexcept {
    return rgb.data() + 3 * (row * width + col);
  }
};

struct RasterWindow {
  std::size_t width = 512;
  double x_lo = -64.0;
  double x_hi = 64.0;
};

inline constexpr std::uint8_t kDensityGrayMax = 200;

/// Column whose centre is nearest to x, clamped to the image.
std::size_t raster_column(const RasterWindow& window, double x) noexcept;

/// One row per profile (top row = first profile). Density is linearly
/// interpolated at column centres and mapped to gray 0..200 against the
/// maximum over all rows; then the worldline pixel of every row is set to
/// white. Throws ArgumentError for fewer than two rows, a worldline of the
/// wrong length, or a degenerate window (x_lo >= x_hi, width 0, or outside
/// the grid).
Image render_spacetime(std::span<const DensityProfile> rows, std::span<const double> worldline,
                       const RasterWindow& window);

/// Binary P6 PPM.
void write_ppm(const Image& image, const std::filesystem::path& path);

void write_spacetime_raster(std::span<const DensityProfile> rows, std::span<const double> worldline,
                            const RasterWindow& window, const std::filesystem::path& path);

}  // namespace dirac1d
