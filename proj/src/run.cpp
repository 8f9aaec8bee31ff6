#include "dirac1d/run.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "dirac1d/csv.hpp"
#include "dirac1d/fourier.hpp"
#include "dirac1d/raster.hpp"
#include "dirac1d/schrodinger.hpp"

namespace dirac1d {
namespace {

/// Initial state plus the matching free evolution (Dirac or Schroedinger).
class Evolution {
 public:
  explicit Evolution(const RunConfig& cfg)
      : grid_(cfg.grid_n, cfg.grid_l),
        dirac_(cfg.packet.kind != PacketKind::schrodinger),
        f0_(make_packet(grid_, cfg.packet)),
        g0_(to_momentum(f0_)) {}

  bool dirac() const noexcept { return dirac_; }
  const MomentumSpinorField& initial_momentum() const noexcept { return g0_; }

  SpinorField at(double t) const {
    if (dirac_) return to_position(evolve(g0_, t));
    return embed_upper(evolve_schrodinger(upper_component(f0_), t));
  }

  ObservableSeries observables(std::span<const double> times) const {
    if (dirac_) return worldline(f0_, times);
    ObservableSeries series;
    for (double t : times) {
      const SpinorField f = at(t);
      ObservableRecord r;
      r.t = t;
      r.mean_x = mean_position(f);
      r.var_x = position_variance(f);
      r.norm = std::sqrt(norm2(f));
      r.mean_p = mean_momentum(to_momentum(f));
      r.mean_vcl = r.mean_p;  // nonrelativistic velocity p/m
      r.mean_z = 0.0;
      series.rows.push_back(r);
    }
    return series;
  }

 private:
  Grid grid_;
  bool dirac_;
  SpinorField f0_;
  MomentumSpinorField g0_;
};

std::vector<double> linspace(double t_max, std::size_t count) {
  std::vector<double> t(count);
  for (std::size_t i = 0; i < count; ++i) {
    t[i] = t_max * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return t;
}

std::string snapshot_name(std::size_t frame) {
  std::ostringstream s;
  s << "snapshot_" << std::setw(4) << std::setfill('0') << frame << ".csv";
  return s.str();
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["tool_version"] = manifest.tool_version;
  j["wall_seconds"] = manifest.wall_seconds;
  j["config"] = manifest.config;
  j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& o : manifest.outputs) {
    j["outputs"].push_back({{"name", o.name}, {"sha256", o.sha256}, {"bytes", o.bytes}});
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

std::string_view version() noexcept { return DIRAC1D_VERSION; }

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw IoError("sha256 init failed");
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char two[3];
    std::snprintf(two, sizeof two, "%02x", digest[i]);
    hex += two;
  }
  return hex;
}

RunManifest run_simulation(const RunConfig& cfg, const std::filesystem::path& out_dir, RunMode mode) {
  const auto started = std::chrono::steady_clock::now();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + out_dir.string() + "': " + ec.message());

  const Evolution evolution(cfg);
  RunManifest manifest;
  manifest.config = cfg.echo;
  manifest.tool_version = std::string(version());
  std::vector<std::string> written;

  const bool all = mode == RunMode::simulate;
  if (all && (cfg.write_observables || cfg.write_snapshots)) {
    const std::vector<double> times = linspace(cfg.t_max, cfg.frames);
    if (cfg.write_observables) {
      write_observables_csv(evolution.observables(times), out_dir / "observables.csv");
      written.push_back("observables.csv");
    }
    if (cfg.write_snapshots) {
      for (std::size_t i = 0; i < cfg.frames; i += cfg.snapshot_stride) {
        write_snapshot_csv(evolution.at(times[i]), out_dir / snapshot_name(i));
        written.push_back(snapshot_name(i));
      }
    }
  }

  const bool want_momentum = mode == RunMode::decompose || (all && cfg.write_momentum);
  if (want_momentum) {
    if (!evolution.dirac()) {
      if (mode == RunMode::decompose) {
        throw ConfigError(0, "momentum decomposition needs a Dirac packet, not 'schrodinger'");
      }
    } else {
      write_momentum_csv(momentum_decomposition(evolution.initial_momentum()), out_dir / "momentum.csv");
      written.push_back("momentum.csv");
    }
  }

  if (mode == RunMode::spacetime || (all && cfg.write_spacetime)) {
    const std::vector<double> times = linspace(cfg.t_max, cfg.raster_height);
    std::vector<DensityProfile> rows;
    rows.reserve(times.size());
    for (double t : times) rows.push_back(density(evolution.at(t)));
    const std::vector<double> line = evolution.observables(times).mean_x();
    write_spacetime_raster(rows, line, {cfg.raster_width, cfg.raster_x_lo, cfg.raster_x_hi},
                           out_dir / "spacetime.ppm");
    written.push_back("spacetime.ppm");
  }

  for (const auto& name : written) {
    const auto path = out_dir / name;
    manifest.outputs.push_back({name, sha256_file(path), static_cast<std::size_t>(std::filesystem::file_size(path))});
  }
  manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  write_manifest(manifest, out_dir / "manifest.json");
  return manifest;
}

PeakTrackResult run_peak_tracking(const RunConfig& cfg) {
  const Evolution evolution(cfg);
  const double t_end = cfg.peaks_t_end < 0.0 ? cfg.t_max : cfg.peaks_t_end;
  const auto steps = static_cast<std::size_t>(std::floor((t_end - cfg.peaks_t_start) / cfg.peaks_dt + 1e-9));
  std::vector<DensityProfile> frames;
  frames.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    frames.push_back(density(evolution.at(cfg.peaks_t_start + static_cast<double>(i) * cfg.peaks_dt)));
  }
  return track_peaks(frames, cfg.peaks_x_lo, cfg.peaks_x_hi);
}

}  // namespace dirac1d
