#include "dirac1d/observables.hpp"

#include <algorithm>

#include "dirac1d/fourier.hpp"

namespace dirac1d {
namespace {

constexpr double kDegenerateNorm = 1e-12;
constexpr double kZbwImagTolerance = 1e-10;

template <class Field>
double checked_norm2(const Field& f, const char* what) {
  const double n2 = norm2(f);
  if (!(n2 >= kDegenerateNorm)) {
    throw DegenerateStateError(std::string(what) + ": state norm is (numerically) zero");
  }
  return n2;
}

}  // namespace

DensityProfile::DensityProfile(Grid grid, std::vector<double> rho, double time)
    : grid_(grid), rho_(std::move(rho)), time_(time) {
  if (rho_.size() != grid_.size()) throw DimensionError("density profile size does not match grid");
}

double DensityProfile::integral() const noexcept {
  double sum = 0.0;
  for (double r : rho_) sum += r;
  return sum * grid_.dx();
}

std::vector<double> ObservableSeries::times() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.t);
  return out;
}

std::vector<double> ObservableSeries::mean_x() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.mean_x);
  return out;
}

DensityProfile density(const SpinorField& f) {
  std::vector<double> rho(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) rho[j] = norm2(f[j]);
  return DensityProfile(f.grid(), std::move(rho), f.time());
}

double mean_position(const SpinorField& f) {
  const double n2 = checked_norm2(f, "mean_position");
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) sum += f.grid().position(j) * norm2(f[j]);
  return sum * f.grid().dx() / n2;
}

double position_variance(const SpinorField& f) {
  const double mean = mean_position(f);
  const double n2 = norm2(f);
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double d = f.grid().position(j) - mean;
    sum += d * d * norm2(f[j]);
  }
  return sum * f.grid().dx() / n2;
}

double mean_momentum(const MomentumSpinorField& g) {
  const double n2 = checked_norm2(g, "mean_momentum");
  double sum = 0.0;
  for (std::size_t m = 0; m < g.size(); ++m) sum += g.grid().momentum(m) * norm2(g[m]);
  return sum * g.grid().dp() / n2;
}

MomentumDensityPair momentum_decomposition(const MomentumSpinorField& g) {
  const MomentumSpinorField pos = project(g, EnergySign::positive);
  const MomentumSpinorField neg = project(g, EnergySign::negative);
  MomentumDensityPair out{g.grid(), std::vector<double>(g.size()), std::vector<double>(g.size())};
  for (std::size_t m = 0; m < g.size(); ++m) {
    out.rho_pos[m] = norm2(pos[m]);
    out.rho_neg[m] = norm2(neg[m]);
  }
  return out;
}

double classical_velocity_mean(const MomentumSpinorField& g) {
  const double n2 = checked_norm2(g, "classical_velocity_mean");
  const MomentumDensityPair pair = momentum_decomposition(g);
  double sum = 0.0;
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double p = g.grid().momentum(m);
    sum += p / energy(p) * (pair.rho_pos[m] - pair.rho_neg[m]);
  }
  return sum * g.grid().dp() / n2;
}

Mat2 zbw_matrix(double p, double t) noexcept {
  const double lambda = energy(p);
  const Mat2 h = h0_matrix(p);
  const Mat2 h_inverse = h * cplx{1.0 / (lambda * lambda)};
  // e^{2iht} - 1 = (cos 2 lambda t - 1) + i sin(2 lambda t) h / lambda
  const double half_angle = std::sin(lambda * t);
  const Mat2 phase = Mat2::identity() * cplx{-2.0 * half_angle * half_angle} +
                     h * cplx{0.0, std::sin(2.0 * lambda * t) / lambda};
  const Mat2 velocity_gap = Mat2::sigma1() - h * cplx{p / (lambda * lambda)};
  return (h_inverse * phase * velocity_gap) * cplx{0.0, -0.5};
}

double zbw_mean(const MomentumSpinorField& g0, double t) {
  if (!std::isfinite(t)) throw ArgumentError("zbw_mean: time must be finite");
  const double n2 = checked_norm2(g0, "zbw_mean");
  cplx sum{};
  for (std::size_t m = 0; m < g0.size(); ++m) {
    sum += dot(g0[m], zbw_matrix(g0.grid().momentum(m), t) * g0[m]);
  }
  sum *= g0.grid().dp() / n2;
  if (std::abs(sum.imag()) > kZbwImagTolerance) {
    throw NumericError("zbw_mean: imaginary part " + std::to_string(sum.imag()) + " exceeds tolerance");
  }
  return sum.real();
}

double instantaneous_velocity_mean(const SpinorField& f) {
  const double n2 = checked_norm2(f, "instantaneous_velocity_mean");
  double sum = 0.0;
  for (const auto& v : f.values()) sum += 2.0 * (std::conj(v.c1) * v.c2).real();
  return sum * f.grid().dx() / n2;
}

double phase_velocity(double p, EnergySign sign) {
  if (p == 0.0) throw DivergenceError("phase velocity diverges at p = 0");
  const double v = energy(p) / p;
  return sign == EnergySign::positive ? v : -v;
}

double group_velocity(double p, EnergySign sign) noexcept {
  const double v = p / energy(p);
  return sign == EnergySign::positive ? v : -v;
}

ObservableSeries worldline(const SpinorField& f0, std::span<const double> times) {
  if (times.empty()) throw ArgumentError("worldline: no times given");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw ArgumentError("worldline: non-finite time");
    if (i > 0 && !(times[i] > times[i - 1])) throw ArgumentError("worldline: times must ascend");
  }
  const MomentumSpinorField g0 = to_momentum(f0.with_time(0.0));
  ObservableSeries series;
  series.rows.reserve(times.size());
  for (double t : times) {
    const MomentumSpinorField g = evolve(g0, t);
    const SpinorField f = to_position(g);
    ObservableRecord r;
    r.t = t;
    r.mean_x = mean_position(f);
    r.var_x = position_variance(f);
    r.norm = std::sqrt(norm2(f));
    r.mean_p = mean_momentum(g);
    r.mean_vcl = classical_velocity_mean(g);
    r.mean_z = zbw_mean(g0, t);
    series.rows.push_back(r);
  }
  return series;
}

LinearFit fit_line(std::span<const double> t, std::span<const double> y) {
  if (t.size() != y.size()) throw DimensionError("fit_line: length mismatch");
  if (t.size() < 2) throw ArgumentError("fit_line: need at least two points");
  const double n = static_cast<double>(t.size());
  double mt = 0.0, my = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    mt += t[i];
    my += y[i];
  }
  mt /= n;
  my /= n;
  double stt = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    stt += (t[i] - mt) * (t[i] - mt);
    sty += (t[i] - mt) * (y[i] - my);
  }
  if (!(stt > 0.0)) throw ArgumentError("fit_line: abscissae are all equal");
  LinearFit fit;
  fit.slope = sty / stt;
  fit.intercept = my - fit.slope * mt;
  for (std::size_t i = 0; i < t.size(); ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(y[i] - (fit.slope * t[i] + fit.intercept)));
  }
  return fit;
}

}  // namespace dirac1d
