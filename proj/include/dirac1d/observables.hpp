#pragma once

#include <span>
#include <vector>

#include "dirac1d/field.hpp"
#include "dirac1d/spectral.hpp"

namespace dirac1d {

/// Position probability density rho_j = |psi1(x_j)|^2 + |psi2(x_j)|^2.
class DensityProfile {
 public:
  DensityProfile(Grid grid, std::vector<double> rho, double time);

  const Grid& grid() const noexcept { return grid_; }
  double time() const noexcept { return time_; }
  std::span<const double> rho() const noexcept { return rho_; }
  double operator[](std::size_t j) const noexcept { return rho_[j]; }
  /// Sum rho_j dx.
  double integral() const noexcept;

 private:
  Grid grid_;
  std::vector<double> rho_;
  double time_;
};

/// |psi^_pos(p)|^2 and |psi^_neg(p)|^2 in momentum storage order.
struct MomentumDensityPair {
  Grid grid;
  std::vector<double> rho_pos;
  std::vector<double> rho_neg;
};

struct ObservableRecord {
  double t = 0.0;
  double mean_x = 0.0;
  double mean_p = 0.0;
  double norm = 0.0;
  double mean_vcl = 0.0;
  double mean_z = 0.0;  ///< Re <Z(t)>
  double var_x = 0.0;
};

struct ObservableSeries {
  std::vector<ObservableRecord> rows;

  std::vector<double> times() const;
  std::vector<double> mean_x() const;
};

DensityProfile density(const SpinorField& f);

// First moments are normalized by the field's own norm^2 and throw
// DegenerateStateError when that is below 1e-12.
double mean_position(const SpinorField& f);
double position_variance(const SpinorField& f);
double mean_momentum(const MomentumSpinorField& g);

MomentumDensityPair momentum_decomposition(const MomentumSpinorField& g);

/// <v_cl> = Int (p/lambda) (rho_pos - rho_neg) dp / norm^2.
double classical_velocity_mean(const MomentumSpinorField& g);

/// Per-mode Zitterbewegung matrix
///   z(p,t) = (2i h0)^(-1) (e^{2 i h0 t} - 1) (sigma1 - p h0 / lambda^2).
Mat2 zbw_matrix(double p, double t) noexcept;

/// Re <g0| z(t) |g0> / norm^2. Throws ArgumentError for non-finite t and
/// NumericError if the imaginary part exceeds 1e-10.
double zbw_mean(const MomentumSpinorField& g0, double t);

/// <f| sigma1 |f> / norm^2, the Heisenberg velocity dx/dt at the given time.
double instantaneous_velocity_mean(const SpinorField& f);

/// sign(E) lambda(p) / p. Throws DivergenceError at p == 0.
double phase_velocity(double p, EnergySign sign);
/// sign(E) p / lambda(p).
double group_velocity(double p, EnergySign sign) noexcept;

/// Evolves f0 (taken as t = 0 data) to each time independently and records
/// the observables. Throws ArgumentError for empty, non-finite or
/// non-ascending times.
ObservableSeries worldline(const SpinorField& f0, std::span<const double> times);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;  ///< max |y - (slope t + intercept)|
};

/// Ordinary least squares. Needs at least two distinct abscissae.
LinearFit fit_line(std::span<const double> t, std::span<const double> y);

}  // namespace dirac1d
