#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dirac1d/fourier.hpp"
#include "dirac1d/observables.hpp"
#include "dirac1d/wavepackets.hpp"
#include "oracles.hpp"

using namespace dirac1d;

namespace {

std::vector<SpinorField> canonical_packets(const Grid& g) {
  return {make_gauss11(g), make_gauss11_boosted(g), make_gauss10(g), make_posneg_pair(g)};
}

}  // namespace

TEST_CASE("frozen oracle values reproduce under GSL quadrature") {
  const double c = std::sqrt(2.0 / std::numbers::pi);
  const double drift = oracle::integrate_real_line(
      [&](double p) { return 2.0 * c * p * p / (1.0 + p * p) * std::exp(-8.0 * p * p); });
  CHECK(drift == doctest::Approx(oracle::kGauss11DriftVelocity).epsilon(1e-12));

  const double weight = oracle::integrate_real_line([&](double p) {
    return 0.5 * (1.0 + p / std::sqrt(1.0 + p * p)) * 2.0 * c * std::exp(-8.0 * (p - 0.75) * (p - 0.75));
  });
  CHECK(weight == doctest::Approx(oracle::kBoostedPositiveEnergyWeight).epsilon(1e-12));
  CHECK(0.5 * std::erfc(0.75 * std::sqrt(8.0)) == doctest::Approx(oracle::kBoostedNegativeMomentumFraction).epsilon(1e-13));

  const double vcl = oracle::integrate_real_line([&](double p) {
    const double e = std::exp(-8.0 * (p - 0.75) * (p - 0.75));
    return c * e * p * p / (1.0 + p * p);  // (p/lambda) * (rho_pos - rho_neg) with rho_pm = c e (1 +- p/lambda)
  }) * 2.0;
  CHECK(vcl == doctest::Approx(oracle::kBoostedDriftVelocity).epsilon(1e-12));

  // One constituent of the pair: N^2 e^{-8(p-p0)^2} |P_pos (1,0)|^2 = N^2 e^{..} (1 + 1/lambda)/2.
  auto part = [](double p) { return std::exp(-8.0 * (p - 0.8) * (p - 0.8)) * 0.5 * (1.0 + 1.0 / std::sqrt(1.0 + p * p)); };
  const double mass = oracle::integrate_real_line(part);
  const double n = std::sqrt(1.0 / (2.0 * mass));
  CHECK(n == doctest::Approx(oracle::kPosNegNormalization).epsilon(1e-12));
  const double mean_p = oracle::integrate_real_line([&](double p) { return p * part(p); }) / mass;
  CHECK(mean_p == doctest::Approx(oracle::kPosNegPartMomentum).epsilon(1e-12));
  const double part_v = oracle::integrate_real_line([&](double p) { return p / std::sqrt(1.0 + p * p) * part(p); }) / mass;
  CHECK(part_v == doctest::Approx(oracle::kPosNegPartVelocity).epsilon(1e-12));

  const double pos_mean = oracle::integrate_real_line([&](double p) {
    return p * c * std::exp(-8.0 * p * p) * (1.0 + p / std::sqrt(1.0 + p * p));
  }) / 0.5;
  CHECK(pos_mean == doctest::Approx(oracle::kGauss11PositivePartMomentum).epsilon(1e-12));
}

TEST_CASE("density") {
  const Grid g;
  const auto rho = density(make_gauss11(g));
  const double amp = 2.0 / std::sqrt(32.0 * std::numbers::pi);
  double err = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.position(j);
    err = std::fmax(err, std::abs(rho[j] - amp * std::exp(-x * x / 8.0)));
    REQUIRE(rho[j] >= 0.0);
  }
  CHECK(err <= 1e-12);
  CHECK(rho.integral() == doctest::Approx(1.0).epsilon(1e-12));

  const auto zero = density(SpinorField(g));
  for (double r : zero.rho()) REQUIRE(r == 0.0);

  std::mt19937_64 rng(4);
  const auto f = oracle::random_field(g, rng);
  CHECK(density(f).integral() == doctest::Approx(norm2(f)).epsilon(1e-12));
}

TEST_CASE("first moments") {
  const Grid g;
  CHECK(std::abs(mean_position(make_gauss11(g))) <= 1e-12);
  CHECK(mean_momentum(to_momentum(make_gauss11_boosted(g))) == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(mean_position(make_gaussian(g, 2.0, 5.0, 0.0, 1.0, 1.0)) == doctest::Approx(5.0).epsilon(1e-9));
  CHECK_THROWS_AS(mean_position(SpinorField(g)), DegenerateStateError);
  CHECK_THROWS_AS(mean_momentum(MomentumSpinorField(g)), DegenerateStateError);
  CHECK_THROWS_AS(classical_velocity_mean(MomentumSpinorField(g)), DegenerateStateError);
}

TEST_CASE("momentum decomposition") {
  const Grid g;
  const auto pair = momentum_decomposition(to_momentum(make_gauss11(g)));
  double total = 0.0, mean_pos = 0.0, mean_neg = 0.0, mass_pos = 0.0, mass_neg = 0.0;
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double p = g.momentum(m);
    total += (pair.rho_pos[m] + pair.rho_neg[m]) * g.dp();
    mean_pos += p * pair.rho_pos[m];
    mean_neg += p * pair.rho_neg[m];
    mass_pos += pair.rho_pos[m];
    mass_neg += pair.rho_neg[m];
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(mean_pos / mass_pos == doctest::Approx(oracle::kGauss11PositivePartMomentum).epsilon(1e-9));
  CHECK(mean_pos / mass_pos > 0.0);
  CHECK(mean_neg / mass_neg < 0.0);

  const auto pn = momentum_decomposition(to_momentum(make_posneg_pair(g)));
  double pos_p = 0.0, pos_w = 0.0, neg_p = 0.0, neg_w = 0.0;
  for (std::size_t m = 0; m < g.size(); ++m) {
    pos_p += g.momentum(m) * pn.rho_pos[m];
    pos_w += pn.rho_pos[m];
    neg_p += g.momentum(m) * pn.rho_neg[m];
    neg_w += pn.rho_neg[m];
  }
  CHECK(pos_p / pos_w == doctest::Approx(0.79).epsilon(0.01));
  CHECK(neg_p / neg_w == doctest::Approx(-0.79).epsilon(0.01));
}

TEST_CASE("classical velocity") {
  const Grid g;
  CHECK(classical_velocity_mean(to_momentum(make_gauss11(g))) ==
        doctest::Approx(oracle::kGauss11DriftVelocity).epsilon(1e-9));
  CHECK(classical_velocity_mean(to_momentum(make_gauss11_boosted(g))) ==
        doctest::Approx(oracle::kBoostedDriftVelocity).epsilon(1e-9));
  CHECK(std::abs(classical_velocity_mean(to_momentum(make_gauss10(g)))) <= 1e-9);
  CHECK(classical_velocity_mean(to_momentum(make_posneg_pair(g))) ==
        doctest::Approx(oracle::kPosNegPartVelocity).epsilon(1e-9));
}

TEST_CASE("instantaneous velocity") {
  const Grid g;
  CHECK(instantaneous_velocity_mean(make_gauss11(g)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(instantaneous_velocity_mean(make_gauss10(g))) <= 1e-12);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const double v = instantaneous_velocity_mean(oracle::random_field(g, rng));
    REQUIRE(std::abs(v) <= 1.0 + 1e-14);
  }
}

TEST_CASE("phase and group velocity") {
  CHECK(phase_velocity(0.8, EnergySign::positive) == doctest::Approx(std::sqrt(41.0) / 4.0));
  CHECK(phase_velocity(0.75, EnergySign::positive) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(phase_velocity(-0.75, EnergySign::positive) == doctest::Approx(-5.0 / 3.0).epsilon(1e-15));
  CHECK(phase_velocity(0.75, EnergySign::negative) == doctest::Approx(-5.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(phase_velocity(0.0, EnergySign::positive), DivergenceError);
  CHECK(group_velocity(0.8, EnergySign::positive) == doctest::Approx(4.0 / std::sqrt(41.0)));
  CHECK(group_velocity(-0.8, EnergySign::negative) == doctest::Approx(4.0 / std::sqrt(41.0)));
  for (double p : {1e-3, 0.1, 1.0, 10.0}) {
    CHECK(std::abs(phase_velocity(p, EnergySign::positive)) >= 1.0);
    CHECK(phase_velocity(p, EnergySign::positive) * group_velocity(p, EnergySign::positive) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("zitterbewegung operator") {
  const Grid g;
  double anti = 0.0;
  for (double t : {0.5, 1.0, 7.0}) {
    for (std::size_t m = 0; m < g.size(); ++m) {
      const double p = g.momentum(m);
      const Mat2 z = zbw_matrix(p, t);
      anti = std::fmax(anti, max_abs(z * h0_matrix(p) + h0_matrix(p) * z));
    }
  }
  CHECK(anti <= 1e-12);
  CHECK(max_abs(zbw_matrix(0.3, 0.0)) == 0.0);

  const auto g0 = to_momentum(make_gauss11(g));
  CHECK(zbw_mean(g0, 0.0) == 0.0);
  CHECK_THROWS_AS(zbw_mean(g0, NAN), ArgumentError);
  for (double t : {0.7, 3.0, 25.0}) {
    CHECK(std::abs(zbw_mean(project(g0, EnergySign::positive), t)) <= 1e-10);
    CHECK(std::abs(zbw_mean(project(g0, EnergySign::negative), t)) <= 1e-10);
  }
}

TEST_CASE("position splits into drift and zitterbewegung") {
  const Grid g;
  const std::vector<double> times{0.0, 1.0, 5.0, 20.0, 50.0};
  for (const auto& f0 : canonical_packets(g)) {
    const auto series = worldline(f0, times);
    const double x0 = series.rows.front().mean_x;
    for (const auto& r : series.rows) {
      CHECK(std::abs(r.mean_x - x0 - r.mean_vcl * r.t - r.mean_z) <= 1e-6);
      CHECK(r.norm == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(std::abs(r.mean_p - series.rows.front().mean_p) <= 1e-10);
    }
  }
}

TEST_CASE("worldline argument checks") {
  const Grid g;
  const auto f = make_gauss10(g);
  CHECK_THROWS_AS(worldline(f, {}), ArgumentError);
  const std::vector<double> descending{1.0, 0.5};
  CHECK_THROWS_AS(worldline(f, descending), ArgumentError);
  const std::vector<double> nan{0.0, NAN};
  CHECK_THROWS_AS(worldline(f, nan), ArgumentError);
}

TEST_CASE("parity-even packet has a still worldline") {
  const Grid g;
  std::vector<double> times;
  for (int i = 0; i <= 40; ++i) times.push_back(1.25 * i);
  const auto series = worldline(make_gauss10(g), times);
  for (const auto& r : series.rows) REQUIRE(std::abs(r.mean_x) <= 1e-8);
}

TEST_CASE("initial slope equals the mean of sigma1") {
  const Grid g;
  for (const auto& f0 : canonical_packets(g)) {
    const double dt = 1e-3;
    const double slope = (mean_position(evolve_position(f0, dt)) - mean_position(f0)) / dt;
    CHECK(std::abs(slope - instantaneous_velocity_mean(f0)) <= 1e-4);
  }
}

TEST_CASE("line fit") {
  const std::vector<double> t{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> y{1.0, 3.0, 5.0, 7.5};
  const auto fit = fit_line(t, y);
  CHECK(fit.slope == doctest::Approx(2.15));
  CHECK(fit.intercept == doctest::Approx(0.9));
  CHECK(fit.max_residual == doctest::Approx(0.2));
  CHECK_THROWS_AS(fit_line(std::vector<double>{1.0}, std::vector<double>{1.0}), ArgumentError);
  CHECK_THROWS_AS(fit_line(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 2.0}), ArgumentError);
}
