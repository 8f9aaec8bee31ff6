#include "dirac1d/field.hpp"

namespace dirac1d {

ScalarField upper_component(const SpinorField& f) {
  std::vector<cplx> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = f[j].c1;
  return ScalarField(f.grid(), std::move(out), f.time());
}

SpinorField embed_upper(const ScalarField& f) {
  std::vector<Spinor2> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = {f[j], 0.0};
  return SpinorField(f.grid(), std::move(out), f.time());
}

}  // namespace dirac1d
