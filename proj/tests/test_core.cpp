#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dirac1d/fourier.hpp"
#include "dirac1d/wavepackets.hpp"
#include "oracles.hpp"

using namespace dirac1d;

TEST_CASE("grid geometry") {
  const Grid g;
  CHECK(g.size() == 2048);
  CHECK(g.dx() * static_cast<double>(g.size()) == 2.0 * g.half_length());
  CHECK(g.dx() * g.dp() == doctest::Approx(2.0 * std::numbers::pi / 2048.0).epsilon(1e-15));
  CHECK(g.position(0) == -128.0);
  CHECK(g.position(1024) == 0.0);
  for (std::size_t j = 1; j < g.size(); ++j) CHECK(g.position(g.size() - j) == -g.position(j));

  for (std::size_t m = 0; m < g.size(); ++m) {
    REQUIRE(g.storage_index(g.signed_index(m)) == m);
  }
  CHECK(g.signed_index(1023) == 1023);
  CHECK(g.signed_index(1024) == -1024);
  CHECK(g.momentum(1) == doctest::Approx(std::numbers::pi / 128.0));

  const auto order = g.ascending_momentum_order();
  REQUIRE(order.size() == g.size());
  for (std::size_t i = 1; i < order.size(); ++i) CHECK(g.momentum(order[i - 1]) < g.momentum(order[i]));
}

TEST_CASE("grid rejects bad sizes") {
  CHECK_THROWS_AS(Grid(8, 10.0), ArgumentError);
  CHECK_THROWS_AS(Grid(100, 10.0), ArgumentError);
  CHECK_THROWS_AS(Grid(64, 0.0), ArgumentError);
  CHECK_THROWS_AS(Grid(64, INFINITY), ArgumentError);
  CHECK_NOTHROW(Grid(16, 1.0));
}

TEST_CASE("pauli algebra") {
  const Mat2 one = Mat2::identity();
  CHECK(Mat2::sigma1() * Mat2::sigma1() == one);
  CHECK(Mat2::sigma2() * Mat2::sigma2() == one);
  CHECK(Mat2::sigma3() * Mat2::sigma3() == one);
  CHECK(Mat2::sigma1() * Mat2::sigma3() == -1.0 * (Mat2::sigma3() * Mat2::sigma1()));
  CHECK(Mat2::sigma1() * Mat2::sigma2() == cplx{0, 1} * Mat2::sigma3());
  CHECK(Mat2::sigma2().adjoint() == Mat2::sigma2());
  CHECK(Mat2::sigma3().det() == cplx{-1.0});
  CHECK(Mat2::sigma1().trace() == cplx{0.0});
}

TEST_CASE("field construction checks size") {
  const Grid g(16, 4.0);
  CHECK_THROWS_AS(SpinorField(g, std::vector<Spinor2>(15)), DimensionError);
  const SpinorField zero(g);
  CHECK(norm2(zero) == 0.0);
  CHECK(inner_product(zero, zero) == cplx{0.0});
  CHECK_THROWS_AS(inner_product(zero, SpinorField(Grid(32, 4.0))), DimensionError);
}

TEST_CASE("inner product") {
  const Grid g;
  const auto psi = make_gauss11(g);
  CHECK(std::abs(inner_product(psi, psi) - 1.0) <= 1e-10);

  std::vector<Spinor2> up(g.size()), down(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double e = std::exp(-g.position(j) * g.position(j) / 10.0);
    up[j] = {e, 0.0};
    down[j] = {0.0, e};
  }
  CHECK(std::abs(inner_product(SpinorField(g, up), SpinorField(g, down))) <= 1e-15);

  std::mt19937_64 rng(11);
  const auto a = oracle::random_field(g, rng);
  const auto b = oracle::random_field(g, rng);
  CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) <= 1e-12 * std::abs(inner_product(a, b)));
}

TEST_CASE("fourier transform of the (1,1) Gaussian") {
  const Grid g;
  const auto ghat = to_momentum(make_gauss11(g));
  const double amp = std::pow(2.0 / std::numbers::pi, 0.25);
  double err = 0.0;
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double p = g.momentum(m);
    if (std::abs(p) > 2.0) continue;
    const double expected = amp * std::exp(-4.0 * p * p);
    err = std::fmax(err, std::abs(ghat[m].c1 - expected));
    err = std::fmax(err, std::abs(ghat[m].c2 - expected));
  }
  CHECK(err <= 1e-8);
}

TEST_CASE("fourier matches a direct sum") {
  const Grid g(64, 8.0);
  std::mt19937_64 rng(3);
  const auto f = oracle::random_field(g, rng);
  const auto fhat = to_momentum(f);
  for (std::size_t m = 0; m < g.size(); m += 7) {
    CHECK(std::abs(fhat[m].c1 - oracle::direct_transform(f, 0, g.momentum(m))) <= 1e-12);
    CHECK(std::abs(fhat[m].c2 - oracle::direct_transform(f, 1, g.momentum(m))) <= 1e-12);
  }
}

TEST_CASE("impulse has flat momentum magnitude") {
  const Grid g(256, 16.0);
  std::vector<cplx> v(g.size());
  v[37] = 1.0;
  const auto vhat = to_momentum(ScalarField(g, v));
  const double expected = g.dx() / std::sqrt(2.0 * std::numbers::pi);
  for (const auto& z : vhat.values()) CHECK(std::abs(z) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("plane wave lands in one bin") {
  const Grid g(128, 10.0);
  for (long k : {0L, 1L, -1L, 17L, -64L, 63L}) {
    std::vector<cplx> v(g.size());
    const double p = static_cast<double>(k) * g.dp();
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = std::polar(1.0, p * g.position(j));
    const auto vhat = to_momentum(ScalarField(g, v));
    const std::size_t hit = g.storage_index(k);
    for (std::size_t m = 0; m < g.size(); ++m) {
      if (m == hit) {
        CHECK(std::abs(vhat[m]) > 1.0);
      } else {
        CHECK(std::abs(vhat[m]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("transform properties on random fields") {
  const Grid g(512, 32.0);
  std::mt19937_64 rng(2024);
  double parseval = 0.0, round_trip = 0.0, linearity = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_field(g, rng);
    const auto fhat = to_momentum(f);
    parseval = std::fmax(parseval, std::abs(norm2(fhat) - norm2(f)) / norm2(f));
    round_trip = std::fmax(round_trip, max_abs_diff(to_position(fhat), f));
    if (trial % 10 == 0) {
      const auto h = oracle::random_field(g, rng);
      const cplx alpha{0.3, -1.2}, beta{2.0, 0.5};
      const auto lhs = to_momentum(linear_combination(alpha, f, beta, h));
      const auto rhs = linear_combination(alpha, fhat, beta, to_momentum(h));
      linearity = std::fmax(linearity, max_abs_diff(lhs, rhs));
    }
  }
  CHECK(parseval <= 1e-10);
  CHECK(round_trip <= 1e-12);
  CHECK(linearity <= 1e-12);
}

TEST_CASE("scalar transform round trip and time stamp") {
  const Grid g(64, 4.0);
  std::vector<cplx> v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) v[j] = {std::sin(0.3 * static_cast<double>(j)), 0.1 * static_cast<double>(j)};
  const ScalarField f(g, v, 2.5);
  const auto back = to_position(to_momentum(f));
  CHECK(back.time() == 2.5);
  CHECK(max_abs_diff(back, f) <= 1e-12);
}
