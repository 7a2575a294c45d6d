#include "hornwave/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "hornwave/errors.hpp"

namespace hornwave {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string where(const std::string& key, int line) {
  return line > 0 ? "'" + key + "' (line " + std::to_string(line) + ")" : "'" + key + "' (--set)";
}

const std::set<std::string, std::less<>> kKnownKeys = {
    "gamma", "K0", "K", "T0", "k", "D", "u_star", "q_star", "q0",
    "duct_variant", "duct_D", "duct_flare", "x0", "L", "a0", "C", "shape_samples",
    "profile_samples", "probes", "quad_tol", "quad_intervals", "closure_tol",
    "n_periods", "cells_per_period", "cfl", "flux", "source_coupling", "t_end",
    "positivity_floor", "snapshot_every", "execution", "seed", "random_draws",
    "output_dir", "sweep_param", "sweep_values", "sweep_min", "sweep_max", "sweep_count",
    "sweep_command"};

const std::set<std::string, std::less<>> kSweepable = {"T0", "k", "D", "q_star", "q0", "cfl"};

class Reader {
 public:
  explicit Reader(const RawConfig& raw) : raw_(raw) {}

  const RawEntry* find(const std::string& key) const {
    const auto it = raw_.find(key);
    return it == raw_.end() ? nullptr : &it->second;
  }

  bool has(const std::string& key) const { return find(key) != nullptr; }

  double real(const std::string& key, double fallback) const {
    const auto* e = find(key);
    return e ? to_real(key, *e) : fallback;
  }

  std::size_t count(const std::string& key, std::size_t fallback) const {
    const auto* e = find(key);
    if (!e) return fallback;
    std::size_t v = 0;
    const auto& s = e->value;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw ConfigError("type mismatch for " + where(key, e->line) + ": expected a non-negative integer, got '" + s + "'");
    }
    return v;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto* e = find(key);
    return e ? e->value : fallback;
  }

  int line(const std::string& key) const {
    const auto* e = find(key);
    return e ? e->line : 0;
  }

  static double to_real(const std::string& key, const RawEntry& e) {
    double v = 0.0;
    const auto& s = e.value;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) {
      throw ConfigError("type mismatch for " + where(key, e.line) + ": expected a number, got '" + s + "'");
    }
    return v;
  }

 private:
  const RawConfig& raw_;
};

void require(bool ok, const Reader& r, const std::string& key, const std::string& what) {
  if (!ok) throw ConfigError("invalid value for " + where(key, r.line(key)) + ": " + what);
}

}  // namespace

bool is_sweepable(std::string_view key) { return kSweepable.find(key) != kSweepable.end(); }

RawConfig parse_raw(std::string_view text) {
  RawConfig raw;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t start = 0;
    while (start <= line.size()) {
      const auto comma = line.find(',', start);
      const auto piece = trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      start = comma == std::string_view::npos ? line.size() + 1 : comma + 1;
      if (piece.empty()) continue;
      const auto eq = piece.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value', got '" + piece + "'");
      }
      const auto key = trim(std::string_view(piece).substr(0, eq));
      const auto value = trim(std::string_view(piece).substr(eq + 1));
      if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
      if (value.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty value for '" + key + "'");
      if (raw.count(key)) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
      raw[key] = {value, line_no};
    }
  }
  return raw;
}

void apply_override(RawConfig& raw, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("--set expects key=value, got '" + std::string(assignment) + "'");
  }
  const auto key = trim(assignment.substr(0, eq));
  const auto value = trim(assignment.substr(eq + 1));
  if (key.empty() || value.empty()) {
    throw ConfigError("--set expects key=value, got '" + std::string(assignment) + "'");
  }
  raw[key] = {value, 0};
}

RunConfig build_config(const RawConfig& raw) {
  for (const auto& [key, entry] : raw) {
    if (!kKnownKeys.count(key)) throw ConfigError("unknown key " + where(key, entry.line));
  }
  const Reader r(raw);
  RunConfig c;
  c.raw = raw;

  const double gamma = r.real("gamma", 1.4);
  const double K0 = r.real("K0", 287.06);
  const double K = r.real("K", 69259.5);
  const double T0 = r.real("T0", 300.0);
  require(gamma > 1.0, r, "gamma", "must exceed 1");
  require(K0 > 0.0, r, "K0", "must be positive");
  require(K > 0.0, r, "K", "must be positive");
  require(T0 > 0.0, r, "T0", "temperature must be positive");
  c.gas = GasConstants::make(T0, gamma, K0, K);

  c.source.k = r.real("k", 0.01);
  require(c.source.k > 0.0, r, "k", "friction coefficient must be positive");
  c.q_star = r.real("q_star", 0.2);
  require(c.q_star > 0.0, r, "q_star", "must be positive");
  c.q0 = r.real("q0", 0.21);
  require(c.q0 > 0.0, r, "q0", "must be positive");
  require(c.q0 >= c.q_star, r, "q0", "must not be below q_star");
  if (r.has("D")) {
    if (r.has("u_star")) {
      throw ConfigError("'D' and 'u_star' both given; set one, the other is derived from q_star");
    }
    c.source.D = r.real("D", 0.0);
    require(c.source.D > 0.0, r, "D", "must be positive");
    c.u_star = c.source.D * std::pow(c.q_star, 0.5 * gamma);
  } else {
    c.u_star = r.real("u_star", 10.0);
    require(c.u_star > 0.0, r, "u_star", "must be positive");
    c.source.D = source_constant_for(c.q_star, c.u_star, c.gas);
  }
  require(c.u_star < c.gas.c0, r, r.has("D") ? "D" : "u_star", "reference velocity must stay subsonic");

  const auto variant = r.text("duct_variant", "horn");
  require(variant == "horn" || variant == "exponential", r, "duct_variant", "expected 'horn' or 'exponential'");
  c.duct_variant = variant == "horn" ? DuctVariant::Horn : DuctVariant::Exponential;
  c.duct.k = c.source.k;
  c.duct_flare = r.real("duct_flare", 75.0);
  require(c.duct_flare > 0.0, r, "duct_flare", "must be positive");
  if (r.has("duct_D")) {
    c.duct.D = r.real("duct_D", 0.0);
    require(c.duct.D > 0.0, r, "duct_D", "must be positive");
  } else {
    c.duct.D = std::sqrt(c.duct_flare * gamma * K / c.duct.k);
  }
  c.duct.L = r.real("L", 1.0);
  require(c.duct.L > 0.0, r, "L", "must be positive");
  c.duct.x0 = r.real("x0", 2.0);
  require(c.duct.x0 > c.duct.L, r, "x0", "must exceed the instrument length L");
  c.duct.a0 = r.real("a0", 3.6e-5);
  require(c.duct.a0 > 0.0, r, "a0", "must be positive");
  c.duct.C = r.real("C", 1.7);
  require(c.duct.C > 0.0, r, "C", "must be positive");

  c.shape_samples = r.count("shape_samples", 101);
  require(c.shape_samples >= 2, r, "shape_samples", "need at least 2");
  c.profile_samples = r.count("profile_samples", 1001);
  require(c.profile_samples >= 8, r, "profile_samples", "need at least 8");
  c.probes = r.count("probes", 100);
  require(c.probes >= 1, r, "probes", "need at least 1");
  c.wave.branch.tolerance = r.real("quad_tol", 1e-10);
  require(c.wave.branch.tolerance > 0.0 && c.wave.branch.tolerance < 1e-2, r, "quad_tol", "must lie in (0, 1e-2)");
  c.wave.branch.intervals = r.count("quad_intervals", 2048);
  require(c.wave.branch.intervals >= 8, r, "quad_intervals", "need at least 8");
  c.wave.closure_tol = r.real("closure_tol", 1e-10);
  require(c.wave.closure_tol > 0.0 && c.wave.closure_tol < 1e-2, r, "closure_tol", "must lie in (0, 1e-2)");

  c.n_periods = r.count("n_periods", 1);
  require(c.n_periods >= 1, r, "n_periods", "need at least 1");
  c.cells_per_period = r.count("cells_per_period", 4096);
  require(c.cells_per_period >= 8, r, "cells_per_period", "need at least 8");
  c.solver.cfl = r.real("cfl", 0.9);
  require(c.solver.cfl > 0.0 && c.solver.cfl <= 1.0, r, "cfl", "must lie in (0, 1]");
  const auto flux = r.text("flux", "rusanov");
  require(flux == "rusanov" || flux == "hll", r, "flux", "expected 'rusanov' or 'hll'");
  c.solver.flux = flux == "hll" ? FluxKind::Hll : FluxKind::Rusanov;
  const auto coupling = r.text("source_coupling", "explicit");
  require(coupling == "explicit" || coupling == "strang", r, "source_coupling", "expected 'explicit' or 'strang'");
  c.solver.source_coupling = coupling == "strang" ? SourceCoupling::Strang : SourceCoupling::Explicit;
  const auto exec = r.text("execution", "parallel");
  require(exec == "parallel" || exec == "serial", r, "execution", "expected 'parallel' or 'serial'");
  c.solver.execution = exec == "serial" ? Execution::Serial : Execution::Parallel;
  if (r.has("t_end") && r.text("t_end", "") != "auto") {
    c.t_end = r.real("t_end", 0.0);
    require(*c.t_end >= 0.0, r, "t_end", "must be non-negative");
  }
  c.solver.positivity_floor = r.real("positivity_floor", 1e-12);
  require(c.solver.positivity_floor >= 0.0, r, "positivity_floor", "must be non-negative");
  c.snapshot_every = r.count("snapshot_every", 50);
  require(c.snapshot_every >= 1, r, "snapshot_every", "need at least 1");

  c.seed = r.count("seed", 20080010);
  c.random_draws = r.count("random_draws", 1000);
  require(c.random_draws >= 1, r, "random_draws", "need at least 1");
  c.output_dir = r.text("output_dir", "out");

  c.sweep_command = r.text("sweep_command", "profile");
  require(c.sweep_command == "shape" || c.sweep_command == "roots" || c.sweep_command == "profile" ||
              c.sweep_command == "simulate" || c.sweep_command == "validate",
          r, "sweep_command", "expected one of shape, roots, profile, simulate, validate");
  if (r.has("sweep_param")) {
    SweepSpec s;
    s.parameter = r.text("sweep_param", "");
    require(is_sweepable(s.parameter), r, "sweep_param", "sweepable parameters are T0, k, D, q_star, q0, cfl");
    if (r.has("sweep_values")) {
      std::istringstream is(r.text("sweep_values", ""));
      std::string tok;
      while (is >> tok) s.values.push_back(Reader::to_real("sweep_values", {tok, r.line("sweep_values")}));
    } else {
      require(r.has("sweep_min") && r.has("sweep_max"), r, "sweep_param", "needs sweep_values or sweep_min/sweep_max");
      const double lo = r.real("sweep_min", 0.0);
      const double hi = r.real("sweep_max", 0.0);
      const std::size_t n = r.count("sweep_count", 2);
      require(n >= 1, r, "sweep_count", "need at least 1");
      for (std::size_t i = 0; i < n; ++i) {
        s.values.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
      }
    }
    require(!s.values.empty(), r, "sweep_values", "need at least one value");
    c.sweep = std::move(s);
  }
  return c;
}

}  // namespace hornwave
