#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "dirac1d/errors.hpp"
#include "dirac1d/grid.hpp"
#include "dirac1d/spinor.hpp"

namespace dirac1d {

struct PositionSpace {};
struct MomentumSpace {};

namespace detail {
inline double value_norm2(const Spinor2& s) noexcept { return norm2(s); }
inline double value_norm2(const cplx& z) noexcept { return std::norm(z); }
inline cplx value_dot(const Spinor2& a, const Spinor2& b) noexcept { return dot(a, b); }
inline cplx value_dot(const cplx& a, const cplx& b) noexcept { return std::conj(a) * b; }
}  // namespace detail

/// Samples of a wave function on a grid, tagged with the space they live in
/// and the time they represent. Position fields are indexed like
/// Grid::position, momentum fields like Grid::momentum (wrap-around order).
template <class Value, class Space>
class BasicField {
 public:
  using value_type = Value;
  using space = Space;

  BasicField(Grid grid, std::vector<Value> values, double time = 0.0)
      : grid_(grid), values_(std::move(values)), time_(time) {
    if (values_.size() != grid_.size()) {
      throw DimensionError("field has " + std::to_string(values_.size()) +
                           " samples but grid has " + std::to_string(grid_.size()));
    }
  }

  /// Zero field.
  explicit BasicField(Grid grid, double time = 0.0)
      : grid_(grid), values_(grid.size()), time_(time) {}

  const Grid& grid() const noexcept { return grid_; }
  double time() const noexcept { return time_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Value> values() const noexcept { return values_; }
  const Value& operator[](std::size_t i) const noexcept { return values_[i]; }

  /// Quadrature weight of one sample (dx or dp).
  double measure() const noexcept {
    if constexpr (std::is_same_v<Space, MomentumSpace>) {
      return grid_.dp();
    } else {
      return grid_.dx();
    }
  }

  BasicField with_time(double t) const { return BasicField(grid_, values_, t); }

 private:
  Grid grid_;
  std::vector<Value> values_;
  double time_;
};

using SpinorField = BasicField<Spinor2, PositionSpace>;
using MomentumSpinorField = BasicField<Spinor2, MomentumSpace>;
using ScalarField = BasicField<cplx, PositionSpace>;
using MomentumScalarField = BasicField<cplx, MomentumSpace>;

/// Sum_j <a_j, b_j> * measure. Throws DimensionError on grid mismatch.
template <class V, class S>
cplx inner_product(const BasicField<V, S>& a, const BasicField<V, S>& b) {
  if (!(a.grid() == b.grid())) throw DimensionError("inner_product: grid mismatch");
  cplx sum{};
  for (std::size_t j = 0; j < a.size(); ++j) sum += detail::value_dot(a[j], b[j]);
  return sum * a.measure();
}

/// Squared L2 norm, computed from real moduli so it is exactly real.
template <class V, class S>
double norm2(const BasicField<V, S>& f) noexcept {
  double sum = 0.0;
  for (const auto& v : f.values()) sum += detail::value_norm2(v);
  return sum * f.measure();
}

/// alpha*f + beta*g on the time stamp of f.
template <class V, class S>
BasicField<V, S> linear_combination(cplx alpha, const BasicField<V, S>& f, cplx beta,
                                    const BasicField<V, S>& g) {
  if (!(f.grid() == g.grid())) throw DimensionError("linear_combination: grid mismatch");
  std::vector<V> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = alpha * f[j] + beta * g[j];
  return BasicField<V, S>(f.grid(), std::move(out), f.time());
}

template <class V, class S>
BasicField<V, S> scaled(const BasicField<V, S>& f, cplx s) {
  std::vector<V> out(f.values().begin(), f.values().end());
  for (auto& v : out) v = s * v;
  return BasicField<V, S>(f.grid(), std::move(out), f.time());
}

/// Largest pointwise distance sqrt(norm2(a_j - b_j)).
template <class V, class S>
double max_abs_diff(const BasicField<V, S>& a, const BasicField<V, S>& b) {
  if (!(a.grid() == b.grid())) throw DimensionError("max_abs_diff: grid mismatch");
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    V d = a[j];
    d -= b[j];
    m = std::fmax(m, std::sqrt(detail::value_norm2(d)));
  }
  return m;
}

/// Upper spinor component as a scalar field, and the reverse embedding.
ScalarField upper_component(const SpinorField& f);
SpinorField embed_upper(const ScalarField& f);

}  // namespace dirac1d
