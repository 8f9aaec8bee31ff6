#pragma once

#include "dirac1d/field.hpp"

namespace dirac1d {

// Continuum-normalized discrete Fourier transform on a Grid.
//
//   analysis:  psi^(p) = (2 pi)^(-1/2) Sum_j exp(-i p x_j) psi(x_j) dx
//   synthesis: psi(x)  = (2 pi)^(-1/2) Sum_k exp(+i p_k x) psi^(p_k) dp
//
// The analysis kernel is exp(-ipx), so a sampled plane wave exp(+i p_k x)
// lands in the single momentum bin k. Both directions are exact inverses
// of each other (dx * dp * n = 2 pi) and preserve the L2 norm.
// Spinor transforms act componentwise.

MomentumScalarField to_momentum(const ScalarField& f);
ScalarField to_position(const MomentumScalarField& g);

MomentumSpinorField to_momentum(const SpinorField& f);
SpinorField to_position(const MomentumSpinorField& g);

}  // namespace dirac1d
