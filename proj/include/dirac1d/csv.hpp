#pragma once

#include <filesystem>
#include <string>

#include "dirac1d/observables.hpp"

namespace dirac1d {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

// Column contracts:
//   observables: t,mean_x,mean_p,norm,mean_vcl,zbw_x,var_x
//   snapshot:    x,rho,re_psi1,im_psi1,re_psi2,im_psi2
//   momentum:    p,rho_pos,rho_neg      (ascending p)
// All throw IoError when the file cannot be written.

void write_observables_csv(const ObservableSeries& series, const std::filesystem::path& path);
void write_snapshot_csv(const SpinorField& f, const std::filesystem::path& path);
void write_momentum_csv(const MomentumDensityPair& pair, const std::filesystem::path& path);

}  // namespace dirac1d
