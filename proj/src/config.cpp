#include "dirac1d/config.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "dirac1d/csv.hpp"
#include "dirac1d/schrodinger.hpp"

namespace dirac1d {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::size_t line, std::string_view key, std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError(line, std::string(key) + ": expected a finite number, got '" + std::string(text) + "'");
  }
  return v;
}

std::size_t parse_count(std::size_t line, std::string_view key, std::string_view text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(line, std::string(key) + ": expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::size_t line, std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(line, std::string(key) + ": expected true/false, got '" + std::string(text) + "'");
}

double positive(std::size_t line, std::string_view key, double v) {
  if (!(v > 0.0)) throw ConfigError(line, std::string(key) + " must be > 0");
  return v;
}

std::pair<double, double> window_at(std::size_t line, std::string_view key, std::string_view text) {
  try {
    return parse_window(text);
  } catch (const ConfigError& e) {
    throw ConfigError(line, std::string(key) + ": " + e.what());
  }
}

// Packet parameters each kind accepts.
bool kind_uses(PacketKind kind, std::string_view key) {
  switch (kind) {
    case PacketKind::custom:
      return key == "packet.a" || key == "packet.x0" || key == "packet.q" || key == "packet.w1" ||
             key == "packet.w2";
    case PacketKind::schrodinger:
      return key == "packet.a" || key == "packet.x0" || key == "packet.q";
    case PacketKind::posneg_pair:
      return key == "packet.p0" || key == "packet.b";
    default:
      return false;
  }
}

class Parser {
 public:
  void assign(std::size_t line, std::string_view key, std::string_view value) {
    const auto it = handlers().find(std::string(key));
    if (it == handlers().end()) throw ConfigError(line, "unknown key '" + std::string(key) + "'");
    it->second(*this, line, key, value);
    lines_[std::string(key)] = line;
  }

  void feed_line(std::size_t line, std::string_view raw) {
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) return;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line, "malformed line, expected 'section.key = value'");
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty() || key.find('.') == std::string_view::npos) {
      throw ConfigError(line, "malformed line, expected 'section.key = value'");
    }
    assign(line, key, value);
  }

  RunConfig finish() {
    validate();
    fill_echo();
    return cfg_;
  }

 private:
  using Handler = std::function<void(Parser&, std::size_t, std::string_view, std::string_view)>;

  static const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"grid.n", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           const std::size_t n = parse_count(l, k, v);
           if (n < Grid::kMinSamples || !std::has_single_bit(n)) {
             throw ConfigError(l, "grid.n must be a power of two >= 16");
           }
           p.cfg_.grid_n = n;
         }},
        {"grid.l", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.grid_l = positive(l, k, parse_real(l, k, v));
         }},
        {"packet.kind", [](Parser& p, std::size_t l, std::string_view, std::string_view v) {
           try {
             p.cfg_.packet.kind = packet_kind_from_string(v);
           } catch (const ArgumentError& e) {
             throw ConfigError(l, e.what());
           }
         }},
        {"packet.a", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.packet.width = positive(l, k, parse_real(l, k, v));
         }},
        {"packet.x0", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.packet.center = parse_real(l, k, v);
         }},
        {"packet.q", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.packet.momentum = parse_real(l, k, v);
         }},
        {"packet.w1", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.packet.w1 = parse_real(l, k, v);
         }},
        {"packet.w2", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.packet.w2 = parse_real(l, k, v);
         }},
        {"packet.p0", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.packet.p0 = parse_real(l, k, v);
         }},
        {"packet.b", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.packet.b = positive(l, k, parse_real(l, k, v));
         }},
        {"time.t_max", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.t_max = positive(l, k, parse_real(l, k, v));
         }},
        {"time.frames", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           const std::size_t f = parse_count(l, k, v);
           if (f < 2) throw ConfigError(l, "time.frames must be >= 2");
           p.cfg_.frames = f;
         }},
        {"output.observables", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.write_observables = parse_bool(l, k, v);
         }},
        {"output.snapshots", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.write_snapshots = parse_bool(l, k, v);
         }},
        {"output.momentum", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.write_momentum = parse_bool(l, k, v);
         }},
        {"output.spacetime", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.write_spacetime = parse_bool(l, k, v);
         }},
        {"output.snapshot_stride", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           const std::size_t s = parse_count(l, k, v);
           if (s == 0) throw ConfigError(l, "output.snapshot_stride must be >= 1");
           p.cfg_.snapshot_stride = s;
         }},
        {"raster.width", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           const std::size_t w = parse_count(l, k, v);
           if (w < 16) throw ConfigError(l, "raster.width must be >= 16");
           p.cfg_.raster_width = w;
         }},
        {"raster.height", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           const std::size_t h = parse_count(l, k, v);
           if (h < 16) throw ConfigError(l, "raster.height must be >= 16");
           p.cfg_.raster_height = h;
         }},
        {"raster.x_window", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           std::tie(p.cfg_.raster_x_lo, p.cfg_.raster_x_hi) = window_at(l, k, v);
         }},
        {"peaks.t_start", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.peaks_t_start = parse_real(l, k, v);
           if (p.cfg_.peaks_t_start < 0.0) throw ConfigError(l, "peaks.t_start must be >= 0");
         }},
        {"peaks.t_end", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.peaks_t_end = positive(l, k, parse_real(l, k, v));
         }},
        {"peaks.dt", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           p.cfg_.peaks_dt = positive(l, k, parse_real(l, k, v));
         }},
        {"peaks.window", [](Parser& p, std::size_t l, std::string_view k, std::string_view v) {
           std::tie(p.cfg_.peaks_x_lo, p.cfg_.peaks_x_hi) = window_at(l, k, v);
         }},
    };
    return table;
  }

  std::size_t line_of(const std::string& key) const {
    const auto it = lines_.find(key);
    return it == lines_.end() ? 0 : it->second;
  }

  void validate() {
    const PacketKind kind = cfg_.packet.kind;
    for (const auto& [key, line] : lines_) {
      if (key.starts_with("packet.") && key != "packet.kind" && !kind_uses(kind, key)) {
        throw ConfigError(line, key + " is not used by packet kind " + std::string(to_string(kind)));
      }
    }
    if (kind == PacketKind::custom && cfg_.packet.w1 == 0.0 && cfg_.packet.w2 == 0.0) {
      throw ConfigError(line_of("packet.w1"), "packet.w1 and packet.w2 must not both be zero");
    }

    const double l = cfg_.grid_l;
    const double t_end = cfg_.peaks_t_end < 0.0 ? cfg_.t_max : cfg_.peaks_t_end;
    const double horizon = std::max(cfg_.t_max, t_end);
    double reach = horizon + packet_extent(cfg_.packet);
    if (kind == PacketKind::schrodinger) {
      const NonrelGaussian g{cfg_.packet.width, cfg_.packet.center, cfg_.packet.momentum};
      reach = std::abs(g.center) + std::abs(g.momentum) * horizon + 8.0 * nonrel_width(g, horizon);
    }
    if (!(reach < l)) {
      throw ConfigError(line_of("time.t_max"),
                        "wrap-around guard: packet reach " + format_double(reach) +
                            " at t_max is not inside the grid half-length " + format_double(l));
    }
    try {
      check_resolution(Grid(cfg_.grid_n, l), cfg_.packet);
    } catch (const NumericError& e) {
      throw ConfigError(line_of("grid.l"), e.what());
    }
    const double dx = 2.0 * l / static_cast<double>(cfg_.grid_n);
    if (cfg_.raster_x_lo < -l || cfg_.raster_x_hi > l - dx) {
      throw ConfigError(line_of("raster.x_window"), "raster.x_window must lie inside the grid");
    }
    if (cfg_.peaks_x_lo < -l || cfg_.peaks_x_hi > l - dx) {
      throw ConfigError(line_of("peaks.window"), "peaks.window must lie inside the grid");
    }
    if (!(t_end > cfg_.peaks_t_start)) {
      throw ConfigError(line_of("peaks.t_end"), "peaks.t_end must exceed peaks.t_start");
    }
  }

  void fill_echo() {
    auto& e = cfg_.echo;
    e["grid.n"] = std::to_string(cfg_.grid_n);
    e["grid.l"] = format_double(cfg_.grid_l);
    e["packet.kind"] = std::string(to_string(cfg_.packet.kind));
    switch (cfg_.packet.kind) {
      case PacketKind::custom:
        e["packet.w1"] = format_double(cfg_.packet.w1);
        e["packet.w2"] = format_double(cfg_.packet.w2);
        [[fallthrough]];
      case PacketKind::schrodinger:
        e["packet.a"] = format_double(cfg_.packet.width);
        e["packet.x0"] = format_double(cfg_.packet.center);
        e["packet.q"] = format_double(cfg_.packet.momentum);
        break;
      case PacketKind::posneg_pair:
        e["packet.p0"] = format_double(cfg_.packet.p0);
        e["packet.b"] = format_double(cfg_.packet.b);
        break;
      default:
        break;
    }
    e["time.t_max"] = format_double(cfg_.t_max);
    e["time.frames"] = std::to_string(cfg_.frames);
    e["output.observables"] = cfg_.write_observables ? "true" : "false";
    e["output.snapshots"] = cfg_.write_snapshots ? "true" : "false";
    e["output.momentum"] = cfg_.write_momentum ? "true" : "false";
    e["output.spacetime"] = cfg_.write_spacetime ? "true" : "false";
    e["output.snapshot_stride"] = std::to_string(cfg_.snapshot_stride);
    e["raster.width"] = std::to_string(cfg_.raster_width);
    e["raster.height"] = std::to_string(cfg_.raster_height);
    e["raster.x_window"] = format_double(cfg_.raster_x_lo) + ":" + format_double(cfg_.raster_x_hi);
    e["peaks.t_start"] = format_double(cfg_.peaks_t_start);
    e["peaks.t_end"] = format_double(cfg_.peaks_t_end < 0.0 ? cfg_.t_max : cfg_.peaks_t_end);
    e["peaks.dt"] = format_double(cfg_.peaks_dt);
    e["peaks.window"] = format_double(cfg_.peaks_x_lo) + ":" + format_double(cfg_.peaks_x_hi);
  }

  RunConfig cfg_;
  std::map<std::string, std::size_t> lines_;
};

}  // namespace

std::pair<double, double> parse_window(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ConfigError(0, "window must be LO:HI");
  const double lo = parse_real(0, "window", trim(text.substr(0, colon)));
  const double hi = parse_real(0, "window", trim(text.substr(colon + 1)));
  if (!(lo < hi)) throw ConfigError(0, "window must satisfy LO < HI");
  return {lo, hi};
}

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  Parser parser;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    parser.feed_line(++line, raw);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    const std::string_view ov = o;
    if (eq == std::string::npos) throw ConfigError(0, "override '" + o + "' must be key=value");
    const std::string_view key = trim(ov.substr(0, eq));
    const std::string_view value = trim(ov.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(0, "override '" + o + "' must be key=value");
    try {
      parser.assign(0, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(0, "override: " + std::string(e.what()));
    }
  }
  return parser.finish();
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), overrides);
}

}  // namespace dirac1d
