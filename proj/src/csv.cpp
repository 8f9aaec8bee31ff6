#include "dirac1d/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>

namespace dirac1d {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

template <class... Values>
void write_row(std::ofstream& out, double first, Values... rest) {
  out << format_double(first);
  ((out << ',' << format_double(rest)), ...);
  out << '\n';
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void write_observables_csv(const ObservableSeries& series, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "t,mean_x,mean_p,norm,mean_vcl,zbw_x,var_x\n";
  for (const auto& r : series.rows) write_row(out, r.t, r.mean_x, r.mean_p, r.norm, r.mean_vcl, r.mean_z, r.var_x);
  finish(out, path);
}

void write_snapshot_csv(const SpinorField& f, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "x,rho,re_psi1,im_psi1,re_psi2,im_psi2\n";
  for (std::size_t j = 0; j < f.size(); ++j) {
    const Spinor2& v = f[j];
    write_row(out, f.grid().position(j), norm2(v), v.c1.real(), v.c1.imag(), v.c2.real(), v.c2.imag());
  }
  finish(out, path);
}

void write_momentum_csv(const MomentumDensityPair& pair, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "p,rho_pos,rho_neg\n";
  for (std::size_t m : pair.grid.ascending_momentum_order()) {
    write_row(out, pair.grid.momentum(m), pair.rho_pos[m], pair.rho_neg[m]);
  }
  finish(out, path);
}

}  // namespace dirac1d
