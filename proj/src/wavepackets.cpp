#include "dirac1d/wavepackets.hpp"

#include <array>
#include <numbers>

#include "dirac1d/fourier.hpp"
#include "dirac1d/spectral.hpp"

namespace dirac1d {
namespace {

constexpr std::array<std::pair<PacketKind, std::string_view>, 6> kKindNames{{
    {PacketKind::gauss11, "gauss11"},
    {PacketKind::gauss11_boosted, "gauss11_boosted"},
    {PacketKind::gauss10, "gauss10"},
    {PacketKind::posneg_pair, "posneg_pair"},
    {PacketKind::custom, "custom"},
    {PacketKind::schrodinger, "schrodinger"},
}};

constexpr double kBoost = 0.75;
constexpr double kWidthsPerHalfLength = 8.0;

double packet_momentum_center(const PacketSpec& spec) noexcept {
  switch (spec.kind) {
    case PacketKind::gauss11_boosted: return kBoost;
    case PacketKind::posneg_pair: return std::abs(spec.p0);
    case PacketKind::custom:
    case PacketKind::schrodinger: return spec.momentum;
    default: return 0.0;
  }
}

double packet_center(const PacketSpec& spec) noexcept {
  return spec.kind == PacketKind::custom || spec.kind == PacketKind::schrodinger ? spec.center : 0.0;
}

template <class F>
SpinorField sample(const Grid& grid, F&& amplitude) {
  std::vector<Spinor2> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) values[j] = amplitude(grid.position(j));
  return SpinorField(grid, std::move(values));
}

}  // namespace

std::string_view to_string(PacketKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

PacketKind packet_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw ArgumentError("unknown packet kind '" + std::string(name) + "'");
}

double packet_sigma_x(const PacketSpec& spec) noexcept {
  switch (spec.kind) {
    case PacketKind::gauss11:
    case PacketKind::gauss11_boosted: return 2.0;
    case PacketKind::gauss10: return std::numbers::sqrt2;
    case PacketKind::posneg_pair: return std::sqrt(spec.b);
    case PacketKind::custom:
    case PacketKind::schrodinger: return spec.width;
  }
  return spec.width;
}

double packet_extent(const PacketSpec& spec) noexcept {
  return std::abs(packet_center(spec)) + kWidthsPerHalfLength * packet_sigma_x(spec);
}

void check_resolution(const Grid& grid, const PacketSpec& spec) {
  const double sigma_x = packet_sigma_x(spec);
  if (!(sigma_x > 0.0) || !std::isfinite(sigma_x)) {
    throw ArgumentError("packet width must be positive and finite");
  }
  const double extent = packet_extent(spec);
  if (grid.half_length() < extent) {
    throw ResolutionError("grid half-length " + std::to_string(grid.half_length()) +
                          " does not cover the packet extent " + std::to_string(extent));
  }
  // Minimum-uncertainty Gaussians: sigma_p = 1 / (2 sigma_x).
  const double p_needed = std::abs(packet_momentum_center(spec)) + kWidthsPerHalfLength / (2.0 * sigma_x);
  if (grid.p_max() < p_needed) {
    throw ResolutionError("grid spacing too coarse: Nyquist momentum " + std::to_string(grid.p_max()) +
                          " below required " + std::to_string(p_needed));
  }
}

SpinorField make_gauss11(const Grid& grid) {
  check_resolution(grid, {.kind = PacketKind::gauss11});
  const double c = std::pow(1.0 / (32.0 * std::numbers::pi), 0.25);
  return sample(grid, [c](double x) {
    const double v = c * std::exp(-x * x / 16.0);
    return Spinor2{v, v};
  });
}

SpinorField make_gauss11_boosted(const Grid& grid) {
  check_resolution(grid, {.kind = PacketKind::gauss11_boosted});
  const double c = std::pow(1.0 / (32.0 * std::numbers::pi), 0.25);
  return sample(grid, [c](double x) {
    const cplx v = c * std::exp(-x * x / 16.0) * std::polar(1.0, kBoost * x);
    return Spinor2{v, v};
  });
}

SpinorField make_gauss10(const Grid& grid) {
  check_resolution(grid, {.kind = PacketKind::gauss10});
  const double c = std::pow(1.0 / (4.0 * std::numbers::pi), 0.25);
  return sample(grid, [c](double x) { return Spinor2{c * std::exp(-x * x / 8.0), 0.0}; });
}

PosNegParts posneg_pair_parts(const Grid& grid, double p0, double b) {
  if (!(b > 0.0) || !std::isfinite(b) || !std::isfinite(p0)) {
    throw ArgumentError("posneg_pair: exponent b must be positive and p0 finite");
  }
  check_resolution(grid, {.kind = PacketKind::posneg_pair, .p0 = p0, .b = b});
  std::vector<Spinor2> pos(grid.size()), neg(grid.size());
  for (std::size_t m = 0; m < grid.size(); ++m) {
    const double p = grid.momentum(m);
    pos[m] = energy_projector(p, EnergySign::positive) * Spinor2{std::exp(-b * (p - p0) * (p - p0)), 0.0};
    neg[m] = energy_projector(p, EnergySign::negative) * Spinor2{0.0, std::exp(-b * (p + p0) * (p + p0))};
  }
  MomentumSpinorField pos_field(grid, std::move(pos));
  MomentumSpinorField neg_field(grid, std::move(neg));
  const double total = norm2(linear_combination(1.0, pos_field, 1.0, neg_field));
  const double scale = 1.0 / std::sqrt(total);
  return {scaled(pos_field, scale), scaled(neg_field, scale)};
}

SpinorField make_posneg_pair(const Grid& grid, double p0, double b) {
  const PosNegParts parts = posneg_pair_parts(grid, p0, b);
  return to_position(linear_combination(1.0, parts.pos, 1.0, parts.neg));
}

SpinorField make_gaussian(const Grid& grid, double a, double x0, double q, cplx w1, cplx w2) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ArgumentError("gaussian width must be positive");
  const double w = std::sqrt(std::norm(w1) + std::norm(w2));
  if (!(w > 0.0) || !std::isfinite(w)) throw ArgumentError("spinor weights must not all vanish");
  check_resolution(grid, {.kind = PacketKind::custom, .width = a, .center = x0, .momentum = q});
  const double c = std::pow(2.0 * std::numbers::pi * a * a, -0.25);
  const cplx u1 = w1 / w, u2 = w2 / w;
  return sample(grid, [=](double x) {
    const double d = x - x0;
    const cplx v = c * std::exp(-d * d / (4.0 * a * a)) * std::polar(1.0, q * x);
    return Spinor2{v * u1, v * u2};
  });
}

SpinorField make_packet(const Grid& grid, const PacketSpec& spec) {
  switch (spec.kind) {
    case PacketKind::gauss11: return make_gauss11(grid);
    case PacketKind::gauss11_boosted: return make_gauss11_boosted(grid);
    case PacketKind::gauss10: return make_gauss10(grid);
    case PacketKind::posneg_pair: return make_posneg_pair(grid, spec.p0, spec.b);
    case PacketKind::custom:
      return make_gaussian(grid, spec.width, spec.center, spec.momentum, spec.w1, spec.w2);
    case PacketKind::schrodinger:
      return make_gaussian(grid, spec.width, spec.center, spec.momentum, 1.0, 0.0);
  }
  throw ArgumentError("unhandled packet kind");
}

SpinorField parity(const SpinorField& f) {
  const std::size_t n = f.size();
  std::vector<Spinor2> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Spinor2& mirror = f[(n - j) % n];
    out[j] = {mirror.c1, -mirror.c2};
  }
  return SpinorField(f.grid(), std::move(out), f.time());
}

}  // namespace dirac1d
