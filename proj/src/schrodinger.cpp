#include "dirac1d/schrodinger.hpp"

#include <numbers>

#include "dirac1d/fourier.hpp"

namespace dirac1d {

double nonrel_width(const NonrelGaussian& g, double t) noexcept {
  const double a = g.width;
  return a * std::sqrt(1.0 + t * t / (4.0 * a * a * a * a));
}

double nonrel_density(const NonrelGaussian& g, double t, double x) {
  if (!(g.width > 0.0)) throw ArgumentError("nonrelativistic width must be positive");
  const double w = nonrel_width(g, t);
  const double d = x - g.center - g.momentum * t;
  return std::exp(-d * d / (2.0 * w * w)) / (std::sqrt(2.0 * std::numbers::pi) * w);
}

ScalarField make_nonrel_gaussian(const Grid& grid, const NonrelGaussian& g) {
  if (!(g.width > 0.0)) throw ArgumentError("nonrelativistic width must be positive");
  const double a = g.width;
  const double c = std::pow(2.0 * std::numbers::pi * a * a, -0.25);
  std::vector<cplx> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.position(j);
    const double d = x - g.center;
    values[j] = c * std::exp(-d * d / (4.0 * a * a)) * std::polar(1.0, g.momentum * x);
  }
  return ScalarField(grid, std::move(values));
}

ScalarField evolve_schrodinger(const ScalarField& f0, double t) {
  if (!std::isfinite(t)) throw ArgumentError("evolve_schrodinger: time must be finite");
  const MomentumScalarField g = to_momentum(f0);
  std::vector<cplx> out(g.size());
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double p = g.grid().momentum(m);
    out[m] = g[m] * std::polar(1.0, -0.5 * p * p * t);
  }
  return to_position(MomentumScalarField(g.grid(), std::move(out), f0.time() + t));
}

}  // namespace dirac1d
