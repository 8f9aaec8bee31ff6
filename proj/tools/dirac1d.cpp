// dirac1d: free 1D Dirac wave-packet simulator.
//
//   dirac1d simulate  <config> [--out DIR] [key=value ...]
//   dirac1d decompose <config> [--out DIR] [key=value ...]
//   dirac1d spacetime <config> [--out DIR] [key=value ...]
//   dirac1d peaks     <config> [--window LO:HI] [key=value ...]
//
// Exit codes: 0 ok, 2 configuration error, 3 numeric error, 1 anything else.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "dirac1d/run.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitOther = 1;

struct Invocation {
  std::string config;
  std::string out;
  std::string window;
  std::vector<std::string> overrides;
};

std::filesystem::path output_dir(const Invocation& inv) {
  if (!inv.out.empty()) return inv.out;
  const std::string stem = std::filesystem::path(inv.config).stem().string();
  if (const char* root = std::getenv("DIRAC1D_OUT"); root != nullptr && *root != '\0') {
    return std::filesystem::path(root) / stem;
  }
  return std::filesystem::path("out") / stem;
}

void add_common(CLI::App* cmd, Invocation& inv, bool with_out) {
  cmd->add_option("config", inv.config, "run configuration file")->required();
  if (with_out) cmd->add_option("--out", inv.out, "output directory (default $DIRAC1D_OUT/<config> or out/<config>)");
  cmd->add_option("overrides", inv.overrides, "key=value assignments applied after the file");
}

int run_files(const Invocation& inv, dirac1d::RunMode mode) {
  const dirac1d::RunConfig cfg = dirac1d::load_config(inv.config, inv.overrides);
  const auto dir = output_dir(inv);
  const dirac1d::RunManifest manifest = dirac1d::run_simulation(cfg, dir, mode);
  for (const auto& file : manifest.outputs) std::cout << (dir / file.name).string() << "  " << file.sha256 << '\n';
  std::cout << (dir / "manifest.json").string() << '\n';
  return 0;
}

int run_peaks(const Invocation& inv) {
  std::vector<std::string> overrides = inv.overrides;
  if (!inv.window.empty()) overrides.push_back("peaks.window=" + inv.window);
  const dirac1d::RunConfig cfg = dirac1d::load_config(inv.config, overrides);
  const dirac1d::PeakTrackResult result = dirac1d::run_peak_tracking(cfg);
  std::cout << "track,points,t_first,x_first,t_last,x_last,speed\n";
  for (std::size_t i = 0; i < result.tracks.size(); ++i) {
    const auto& t = result.tracks[i];
    std::cout << i << ',' << t.positions.size() << ',' << t.times.front() << ',' << t.positions.front() << ','
              << t.times.back() << ',' << t.positions.back() << ',' << t.speed << '\n';
  }
  std::cout << "fitted_speed," << result.fitted_speed << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free one-dimensional Dirac equation: wave-packet simulator"};
  app.set_version_flag("--version", std::string(dirac1d::version()));
  app.require_subcommand(1);

  Invocation inv;
  auto* simulate = app.add_subcommand("simulate", "write observables, snapshots, momentum CSV and raster");
  add_common(simulate, inv, true);
  auto* decompose = app.add_subcommand("decompose", "write the energy-sign momentum densities only");
  add_common(decompose, inv, true);
  auto* spacetime = app.add_subcommand("spacetime", "write the space-time density raster only");
  add_common(spacetime, inv, true);
  auto* peaks = app.add_subcommand("peaks", "track density maxima and report their speeds");
  add_common(peaks, inv, false);
  peaks->add_option("--window", inv.window, "tracking window LO:HI");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (simulate->parsed()) return run_files(inv, dirac1d::RunMode::simulate);
    if (decompose->parsed()) return run_files(inv, dirac1d::RunMode::decompose);
    if (spacetime->parsed()) return run_files(inv, dirac1d::RunMode::spacetime);
    return run_peaks(inv);
  } catch (const dirac1d::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const dirac1d::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
}
