#pragma once

#include "dirac1d/field.hpp"

namespace dirac1d {

/// Free nonrelativistic Gaussian (hbar = m = 1) whose t = 0 density is a
/// normal distribution with std. dev. `width` centred at `center`.
struct NonrelGaussian {
  double width = 2.0;
  double center = 0.0;
  double momentum = 0.0;
};

/// a(t) = a sqrt(1 + t^2 / (4 a^4)).
double nonrel_width(const NonrelGaussian& g, double t) noexcept;

/// Closed-form density at (t, x). Throws ArgumentError for width <= 0.
double nonrel_density(const NonrelGaussian& g, double t, double x);

/// Sampled t = 0 wave function (2 pi a^2)^(-1/4) exp(-(x-x0)^2/(4a^2) + i q x).
ScalarField make_nonrel_gaussian(const Grid& grid, const NonrelGaussian& g);

/// Multiplies every momentum mode by exp(-i p^2 t / 2). Result stamped
/// f0.time() + t. Throws ArgumentError for non-finite t.
ScalarField evolve_schrodinger(const ScalarField& f0, double t);

}  // namespace dirac1d
