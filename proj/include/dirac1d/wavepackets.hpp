#pragma once

#include <string_view>

#include "dirac1d/field.hpp"

namespace dirac1d {

enum class PacketKind { gauss11, gauss11_boosted, gauss10, posneg_pair, custom, schrodinger };

std::string_view to_string(PacketKind kind) noexcept;
/// Throws ArgumentError for an unknown name.
PacketKind packet_kind_from_string(std::string_view name);

/// Parameters of an initial condition. Only `custom`, `schrodinger` and
/// `posneg_pair` read the free parameters; the other kinds are fixed.
///
/// custom / schrodinger:
///   psi(x) = (2 pi a^2)^(-1/4) exp(-(x-x0)^2 / (4 a^2)) exp(i q x) (w1, w2)/|w|
///   so the position density is a normal distribution with std. dev. a.
/// posneg_pair (momentum space):
///   psi^ = N [ P_pos exp(-b (p-p0)^2) (1,0) + P_neg exp(-b (p+p0)^2) (0,1) ]
struct PacketSpec {
  PacketKind kind = PacketKind::gauss11;
  double width = 2.0;     ///< a
  double center = 0.0;    ///< x0
  double momentum = 0.0;  ///< q
  double w1 = 1.0;
  double w2 = 1.0;
  double p0 = 0.8;
  double b = 4.0;
};

/// Position-space std. dev. of the density and its centre, used by the
/// resolution and wrap-around guards.
double packet_sigma_x(const PacketSpec& spec) noexcept;
/// |x0| + 8 sigma_x: half-width of the region the packet occupies at t = 0.
double packet_extent(const PacketSpec& spec) noexcept;

/// Throws ResolutionError unless the grid half-length covers the packet
/// extent and the Nyquist momentum covers |q| + 8 sigma_p.
void check_resolution(const Grid& grid, const PacketSpec& spec);

/// (32 pi)^(-1/4) exp(-x^2/16) (1, 1).
SpinorField make_gauss11(const Grid& grid);

/// make_gauss11 times exp(+3ix/4): mean momentum +3/4 under the exp(-ipx)
/// analysis convention. The printed formula this packet is usually quoted
/// with carries exp(-3ix/4), which would give mean momentum -3/4 here; the
/// sign is chosen to keep the intended physics (main packet moving right).
SpinorField make_gauss11_boosted(const Grid& grid);

/// (4 pi)^(-1/4) exp(-x^2/8) (1, 0). Parity invariant.
SpinorField make_gauss10(const Grid& grid);

struct PosNegParts {
  MomentumSpinorField pos;
  MomentumSpinorField neg;
};

/// Normalized constituents of the positive/negative energy pair, both
/// carrying the common normalization N of the summed packet.
PosNegParts posneg_pair_parts(const Grid& grid, double p0 = 0.8, double b = 4.0);

/// Positive-energy part at +p0 plus negative-energy part at -p0, built in
/// momentum space and transformed to position space; unit total norm.
SpinorField make_posneg_pair(const Grid& grid, double p0 = 0.8, double b = 4.0);

/// General Gaussian spinor (see PacketSpec). Throws ArgumentError for a <= 0
/// or a zero weight vector.
SpinorField make_gaussian(const Grid& grid, double a, double x0, double q, cplx w1, cplx w2);

/// Dispatch on spec.kind. Runs check_resolution first.
SpinorField make_packet(const Grid& grid, const PacketSpec& spec);

/// Parity transform psi(x) -> sigma3 psi(-x); sample j maps to (n - j) mod n.
SpinorField parity(const SpinorField& f);

}  // namespace dirac1d
