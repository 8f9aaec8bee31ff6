#include "dirac1d/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>

namespace dirac1d {
namespace {

// FFTW planning is not thread safe; execution of an existing plan on new
// arrays is. Plans are created once per (size, direction) and reused with
// fftw_execute_dft. FFTW_UNALIGNED lets any std::vector buffer be used.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(std::size_t n, int direction) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, direction);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<cplx> in(n), out(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()), direction,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

void execute(std::vector<cplx>& in, std::vector<cplx>& out, int direction) {
  fftw_plan plan = PlanCache::instance().get(in.size(), direction);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

// x_0 = -l, so exp(-i p_k x_j) = (-1)^k exp(-2 pi i k j / n).
inline double alternating_sign(long k) noexcept { return (k % 2 == 0) ? 1.0 : -1.0; }

std::vector<cplx> forward(const Grid& grid, std::vector<cplx> samples) {
  std::vector<cplx> out(samples.size());
  execute(samples, out, FFTW_FORWARD);
  const double scale = grid.dx() / std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] *= scale * alternating_sign(grid.signed_index(m));
  }
  return out;
}

std::vector<cplx> backward(const Grid& grid, std::vector<cplx> samples) {
  for (std::size_t m = 0; m < samples.size(); ++m) {
    samples[m] *= alternating_sign(grid.signed_index(m));
  }
  std::vector<cplx> out(samples.size());
  execute(samples, out, FFTW_BACKWARD);
  const double scale = grid.dp() / std::sqrt(2.0 * std::numbers::pi);
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace

MomentumScalarField to_momentum(const ScalarField& f) {
  std::vector<cplx> in(f.values().begin(), f.values().end());
  return MomentumScalarField(f.grid(), forward(f.grid(), std::move(in)), f.time());
}

ScalarField to_position(const MomentumScalarField& g) {
  std::vector<cplx> in(g.values().begin(), g.values().end());
  return ScalarField(g.grid(), backward(g.grid(), std::move(in)), g.time());
}

MomentumSpinorField to_momentum(const SpinorField& f) {
  const std::size_t n = f.size();
  std::vector<cplx> a(n), b(n);
  for (std::size_t j = 0; j < n; ++j) {
    a[j] = f[j].c1;
    b[j] = f[j].c2;
  }
  a = forward(f.grid(), std::move(a));
  b = forward(f.grid(), std::move(b));
  std::vector<Spinor2> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m] = {a[m], b[m]};
  return MomentumSpinorField(f.grid(), std::move(out), f.time());
}

SpinorField to_position(const MomentumSpinorField& g) {
  const std::size_t n = g.size();
  std::vector<cplx> a(n), b(n);
  for (std::size_t m = 0; m < n; ++m) {
    a[m] = g[m].c1;
    b[m] = g[m].c2;
  }
  a = backward(g.grid(), std::move(a));
  b = backward(g.grid(), std::move(b));
  std::vector<Spinor2> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = {a[j], b[j]};
  return SpinorField(g.grid(), std::move(out), g.time());
}

}  // namespace dirac1d
