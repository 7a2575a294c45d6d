#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hornwave/duct_geometry.hpp"
#include "hornwave/fv_solver.hpp"
#include "hornwave/gas_model.hpp"
#include "hornwave/wave_builder.hpp"

namespace hornwave {

/// Raw `key = value` pairs with the line each came from (0 for --set overrides).
struct RawEntry {
  std::string value;
  int line = 0;
};
using RawConfig = std::map<std::string, RawEntry>;

struct SweepSpec {
  std::string parameter;
  std::vector<double> values;
};

struct RunConfig {
  GasConstants gas = GasConstants::make();
  SourceParams source;
  DuctParams duct;
  DuctVariant duct_variant = DuctVariant::Horn;
  double duct_flare = 75.0;  // k duct_D^2 / (gamma K)

  double q_star = 0.2;
  double q0 = 0.21;
  double u_star = 10.0;

  std::size_t shape_samples = 101;
  std::size_t profile_samples = 1001;
  std::size_t probes = 100;
  WaveOptions wave;

  std::size_t n_periods = 1;
  std::size_t cells_per_period = 4096;
  SolverConfig solver;
  std::optional<double> t_end;  // unset: 0.1 wavelength / A*
  std::size_t snapshot_every = 50;

  std::uint64_t seed = 20080010;
  std::size_t random_draws = 1000;

  std::string output_dir = "out";
  std::optional<SweepSpec> sweep;
  std::string sweep_command = "profile";

  RawConfig raw;  // as parsed, after overrides; sweeps re-derive from it
};

/// Splits a flat `key = value` document (`#` comments, `,` or newline separated).
/// Duplicate keys are errors.
RawConfig parse_raw(std::string_view text);

/// Applies `key=value` overrides on top of `raw`.
void apply_override(RawConfig& raw, std::string_view assignment);

/// Builds and validates a RunConfig; unknown keys, bad values and violated
/// invariants raise ConfigError naming the key and line.
RunConfig build_config(const RawConfig& raw);

inline RunConfig parse_config(std::string_view text) { return build_config(parse_raw(text)); }

bool is_sweepable(std::string_view key);

}  // namespace hornwave
