#pragma once

#include <span>
#include <vector>

#include "dirac1d/field.hpp"

namespace dirac1d {

enum class EnergySign { positive, negative };

/// Relativistic energy sqrt(p^2 + 1) (natural units).
inline double energy(double p) noexcept { return std::sqrt(p * p + 1.0); }

/// Free Dirac Hamiltonian in momentum space: [[1, p], [p, -1]].
Mat2 h0_matrix(double p) noexcept;

/// P_pos/neg(p) = (1 +- h0(p)/lambda(p)) / 2.
Mat2 energy_projector(double p, EnergySign sign) noexcept;

/// e^{-i h0(p) t} = cos(lambda t) - i sin(lambda t) h0(p)/lambda.
Mat2 propagator_matrix(double p, double t) noexcept;

struct Eigensystem {
  double lambda;
  Spinor2 u_pos;  ///< eigenvalue +lambda
  Spinor2 u_neg;  ///< eigenvalue -lambda
};

/// Eigen-decomposition of h0(p) in the half-angle gauge
/// u_pos = (cos t, sin t), u_neg = (-sin t, cos t), tan t = p / (1 + lambda).
/// The gauge is continuous in p and gives u_pos(0) = (1, 0).
Eigensystem eigensystem(double p) noexcept;

/// Per-mode eigen-data of h0 for every momentum sample of a grid.
class ModeSystem {
 public:
  explicit ModeSystem(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return modes_.size(); }
  double momentum(std::size_t m) const noexcept { return grid_.momentum(m); }
  const Eigensystem& operator[](std::size_t m) const noexcept { return modes_[m]; }

 private:
  Grid grid_;
  std::vector<Eigensystem> modes_;
};

/// Pointwise energy-sign projection. pos and neg parts of the same field are
/// computed from a shared half-sum so they add back to the input to
/// rounding.
MomentumSpinorField project(const MomentumSpinorField& g, EnergySign sign);

/// Exact free evolution by t from g's time stamp (result stamped g.time()+t).
/// Throws ArgumentError for non-finite t.
MomentumSpinorField evolve(const MomentumSpinorField& g, double t);

/// Position-space convenience: to_position(evolve(to_momentum(f0), t)).
SpinorField evolve_position(const SpinorField& f0, double t);

/// Slow reference solution: transforms f0 by a direct O(n^2) sum, splits it
/// into energy components with the eigenvectors of ModeSystem and
/// superposes explicit plane waves u(p) exp(i p x -+ i lambda t) at each
/// requested x by trapezoidal quadrature over the momentum samples.
/// Shares no code path with to_momentum / evolve. Throws ArgumentError when
/// x_points is empty or t is not finite.
std::vector<Spinor2> evolve_quadrature_oracle(const SpinorField& f0, double t,
                                              std::span<const double> x_points);

}  // namespace dirac1d
