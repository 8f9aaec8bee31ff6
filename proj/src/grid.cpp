#include "dirac1d/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "dirac1d/errors.hpp"

namespace dirac1d {

Grid::Grid(std::size_t n, double half_length) : n_(n), l_(half_length) {
  if (n < kMinSamples || !std::has_single_bit(n)) {
    throw ArgumentError("grid size must be a power of two >= 16, got " + std::to_string(n));
  }
  if (!std::isfinite(half_length) || half_length <= 0.0) {
    throw ArgumentError("grid half-length must be positive and finite");
  }
  dx_ = 2.0 * l_ / static_cast<double>(n_);
  dp_ = std::numbers::pi / l_;
}

std::vector<std::size_t> Grid::ascending_momentum_order() const {
  std::vector<std::size_t> order(n_);
  // k = -n/2 .. n/2-1
  for (std::size_t i = 0; i < n_; ++i) {
    order[i] = storage_index(static_cast<long>(i) - static_cast<long>(n_ / 2));
  }
  return order;
}

}  // namespace dirac1d
