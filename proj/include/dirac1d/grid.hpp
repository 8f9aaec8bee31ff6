#pragma once

#include <cstddef>
#include <vector>

namespace dirac1d {

/// Uniform periodic lattice on [-l, l) with n samples and its dual momentum
/// lattice p_k = k * pi / l, k = -n/2 .. n/2-1.
///
/// Momentum samples are stored in transform-natural (wrap-around) order:
/// storage index m holds k = m for m < n/2 and k = m - n otherwise.
/// Positions are computed as x_j = (j - n/2) * dx so that x_{n-j} == -x_j
/// holds bit for bit.
class Grid {
 public:
  static constexpr std::size_t kMinSamples = 16;
  static constexpr std::size_t kDefaultSamples = 2048;
  static constexpr double kDefaultHalfLength = 128.0;

  /// Throws ArgumentError unless n is a power of two >= 16 and l > 0 is finite.
  Grid(std::size_t n, double half_length);
  Grid() : Grid(kDefaultSamples, kDefaultHalfLength) {}

  std::size_t size() const noexcept { return n_; }
  double half_length() const noexcept { return l_; }
  double dx() const noexcept { return dx_; }
  double dp() const noexcept { return dp_; }
  /// Largest representable |p| (the Nyquist momentum n/2 * dp).
  double p_max() const noexcept { return dp_ * static_cast<double>(n_ / 2); }

  double position(std::size_t j) const noexcept {
    return (static_cast<double>(j) - static_cast<double>(n_ / 2)) * dx_;
  }
  double momentum(std::size_t m) const noexcept {
    return static_cast<double>(signed_index(m)) * dp_;
  }

  /// Storage index m -> signed momentum index k.
  long signed_index(std::size_t m) const noexcept {
    return m < n_ / 2 ? static_cast<long>(m) : static_cast<long>(m) - static_cast<long>(n_);
  }
  /// Signed momentum index k in [-n/2, n/2) -> storage index.
  std::size_t storage_index(long k) const noexcept {
    return k >= 0 ? static_cast<std::size_t>(k) : static_cast<std::size_t>(k + static_cast<long>(n_));
  }

  /// Storage indices ordered by ascending momentum.
  std::vector<std::size_t> ascending_momentum_order() const;

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.n_ == b.n_ && a.l_ == b.l_;
  }

 private:
  std::size_t n_;
  double l_;
  double dx_;
  double dp_;
};

}  // namespace dirac1d
