#include "dirac1d/spectral.hpp"

#include <numbers>

#include "dirac1d/fourier.hpp"

namespace dirac1d {

Mat2 h0_matrix(double p) noexcept { return {1.0, p, p, -1.0}; }

Mat2 energy_projector(double p, EnergySign sign) noexcept {
  const double s = (sign == EnergySign::positive ? 0.5 : -0.5) / energy(p);
  return {0.5 + s, s * p, s * p, 0.5 - s};
}

Mat2 propagator_matrix(double p, double t) noexcept {
  const double lambda = energy(p);
  const double c = std::cos(lambda * t);
  const cplx s{0.0, -std::sin(lambda * t) / lambda};
  return {c + s, s * p, s * p, c - s};
}

Eigensystem eigensystem(double p) noexcept {
  const double lambda = energy(p);
  const double theta = std::atan(p / (1.0 + lambda));
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {lambda, {c, s}, {-s, c}};
}

ModeSystem::ModeSystem(const Grid& grid) : grid_(grid) {
  modes_.reserve(grid.size());
  for (std::size_t m = 0; m < grid.size(); ++m) modes_.push_back(eigensystem(grid.momentum(m)));
}

MomentumSpinorField project(const MomentumSpinorField& g, EnergySign sign) {
  const Grid& grid = g.grid();
  const double direction = sign == EnergySign::positive ? 1.0 : -1.0;
  std::vector<Spinor2> out(g.size());
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double p = grid.momentum(m);
    const double inv = 0.5 / energy(p);
    const Spinor2& v = g[m];
    const Spinor2 half{0.5 * v.c1, 0.5 * v.c2};
    const Spinor2 correction{inv * (v.c1 + p * v.c2), inv * (p * v.c1 - v.c2)};
    out[m] = direction > 0 ? half + correction : half - correction;
  }
  return MomentumSpinorField(grid, std::move(out), g.time());
}

MomentumSpinorField evolve(const MomentumSpinorField& g, double t) {
  if (!std::isfinite(t)) throw ArgumentError("evolve: time must be finite");
  const Grid& grid = g.grid();
  std::vector<Spinor2> out(g.size());
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double p = grid.momentum(m);
    const double lambda = energy(p);
    const double c = std::cos(lambda * t);
    const cplx s{0.0, -std::sin(lambda * t) / lambda};
    const Spinor2& v = g[m];
    // (c - i sin/lambda h0) v
    out[m] = {c * v.c1 + s * (v.c1 + p * v.c2), c * v.c2 + s * (p * v.c1 - v.c2)};
  }
  return MomentumSpinorField(grid, std::move(out), g.time() + t);
}

SpinorField evolve_position(const SpinorField& f0, double t) {
  return to_position(evolve(to_momentum(f0), t));
}

std::vector<Spinor2> evolve_quadrature_oracle(const SpinorField& f0, double t,
                                              std::span<const double> x_points) {
  if (x_points.empty()) throw ArgumentError("quadrature oracle: no evaluation points");
  if (!std::isfinite(t)) throw ArgumentError("quadrature oracle: time must be finite");

  const Grid& grid = f0.grid();
  const std::size_t n = grid.size();
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const ModeSystem modes(grid);

  // Energy components psi^_pos(p_k), psi^_neg(p_k) by direct summation.
  std::vector<cplx> a_pos(n), a_neg(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double p = grid.momentum(m);
    Spinor2 hat{};
    for (std::size_t j = 0; j < n; ++j) hat += std::polar(1.0, -p * grid.position(j)) * f0[j];
    hat *= grid.dx() * inv_sqrt_2pi;
    a_pos[m] = dot(modes[m].u_pos, hat);
    a_neg[m] = dot(modes[m].u_neg, hat);
  }

  std::vector<Spinor2> out;
  out.reserve(x_points.size());
  for (double x : x_points) {
    Spinor2 sum{};
    for (std::size_t m = 0; m < n; ++m) {
      const double p = grid.momentum(m);
      const double lambda = modes[m].lambda;
      sum += (a_pos[m] * std::polar(1.0, p * x - lambda * t)) * modes[m].u_pos;
      sum += (a_neg[m] * std::polar(1.0, p * x + lambda * t)) * modes[m].u_neg;
    }
    out.push_back(grid.dp() * inv_sqrt_2pi * sum);
  }
  return out;
}

}  // namespace dirac1d
