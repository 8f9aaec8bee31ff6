#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dirac1d/schrodinger.hpp"

using namespace dirac1d;

namespace {

double max_density_error(const ScalarField& f, const NonrelGaussian& g, double t) {
  double err = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    err = std::fmax(err, std::abs(std::norm(f[j]) - nonrel_density(g, t, f.grid().position(j))));
  }
  return err;
}

double density_std(const ScalarField& f) {
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double x = f.grid().position(j), r = std::norm(f[j]);
    m0 += r;
    m1 += x * r;
    m2 += x * x * r;
  }
  return std::sqrt(m2 / m0 - (m1 / m0) * (m1 / m0));
}

}  // namespace

TEST_CASE("closed-form width") {
  const NonrelGaussian g{2.0, 0.0, 0.0};
  CHECK(nonrel_width(g, 0.0) == 2.0);
  CHECK(nonrel_width(g, 8.0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(nonrel_density(g, 0.0, 0.0) == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0 * std::numbers::pi))));
  CHECK_THROWS_AS(nonrel_density(NonrelGaussian{0.0, 0.0, 0.0}, 1.0, 0.0), ArgumentError);
}

TEST_CASE("centre stays put without momentum") {
  const NonrelGaussian g{1.5, 3.0, 0.0};
  for (double t : {0.0, 4.0, 40.0}) {
    CHECK(nonrel_density(g, t, 3.0 + 0.7) == doctest::Approx(nonrel_density(g, t, 3.0 - 0.7)).epsilon(1e-15));
  }
}

TEST_CASE("grid propagator matches the closed form") {
  const Grid grid;
  const NonrelGaussian g{2.0, 0.0, 0.0};
  const auto f0 = make_nonrel_gaussian(grid, g);
  CHECK(max_density_error(f0, g, 0.0) <= 1e-15);
  CHECK(max_abs_diff(evolve_schrodinger(f0, 0.0), f0) <= 1e-14);
  for (double t : {1.0, 8.0, 30.0}) {
    const auto ft = evolve_schrodinger(f0, t);
    CHECK(ft.time() == t);
    CHECK(max_density_error(ft, g, t) <= 1e-6);
    CHECK(density_std(ft) == doctest::Approx(nonrel_width(g, t)).epsilon(1e-6));
    CHECK(norm2(ft) == doctest::Approx(norm2(f0)).epsilon(1e-12));
  }

  const NonrelGaussian moving{2.0, -10.0, 0.5};
  const auto mt = evolve_schrodinger(make_nonrel_gaussian(grid, moving), 20.0);
  CHECK(max_density_error(mt, moving, 20.0) <= 1e-6);
}

TEST_CASE("spreading does not depend on the boost") {
  const Grid grid;
  const auto rest = evolve_schrodinger(make_nonrel_gaussian(grid, {2.0, 0.0, 0.0}), 12.0);
  const auto boosted = evolve_schrodinger(make_nonrel_gaussian(grid, {2.0, 0.0, 0.75}), 12.0);
  CHECK(std::abs(density_std(rest) - density_std(boosted)) <= 1e-10);
}

TEST_CASE("plane wave picks up exp(-i p^2 t / 2)") {
  const Grid grid(128, 16.0);
  const double p = 5.0 * grid.dp();
  std::vector<cplx> v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) v[j] = std::polar(1.0, p * grid.position(j));
  const ScalarField f(grid, v);
  const auto ft = evolve_schrodinger(f, 2.0);
  const cplx phase = std::polar(1.0, -p * p);
  for (std::size_t j = 0; j < grid.size(); ++j) REQUIRE(std::abs(ft[j] - phase * v[j]) <= 1e-12);
  CHECK_THROWS_AS(evolve_schrodinger(f, NAN), ArgumentError);
}
