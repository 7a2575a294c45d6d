#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hornwave/field_state.hpp"
#include "hornwave/fv_kernels.hpp"
#include "hornwave/gas_model.hpp"

namespace hornwave {

using kernels::FluxKind;

enum class SourceCoupling { Explicit, Strang };
enum class Execution { Serial, Parallel };

struct SolverConfig {
  double cfl = 0.9;
  FluxKind flux = FluxKind::Rusanov;
  SourceCoupling source_coupling = SourceCoupling::Explicit;
  double t_end = 0.0;
  double positivity_floor = 1e-12;
  Execution execution = Execution::Parallel;

  void validate() const;
};

/// (m, m^2/q + c0^2 q): the conservative form of the momentum balance.
kernels::FluxPair physical_flux(double q, double m, double c0);

double max_wave_speed(const FieldState& state, double c0, Execution exec = Execution::Parallel);

/// cfl dx / max(|u| + c0)
double stable_dt(const FieldState& state, const SolverConfig& config, double c0);

/// One time step of the periodic first-order scheme. Without `dt` the CFL step
/// is used; an imposed `dt` above it raises CflError.
FieldState step(const FieldState& state, const SolverConfig& config, const SourceParams& src,
                const GasConstants& gas, std::optional<double> dt = std::nullopt);

struct MassRecord {
  std::size_t step;
  double t;
  double total_mass;
};

struct Trajectory {
  std::vector<FieldState> snapshots;
  std::vector<MassRecord> mass_ledger;
  std::size_t steps = 0;
  /// sum over steps of dt * sum_i S_i dx (explicit coupling); the momentum ledger
  /// must change by minus this amount
  double integrated_source = 0.0;
};

/// Advances `ic` to config.t_end, snapshotting the IC, every `snapshot_every`
/// steps, and the final state.
Trajectory simulate(const FieldState& ic, const SolverConfig& config, const SourceParams& src,
                    const GasConstants& gas, std::size_t snapshot_every);

/// Mean speed between the first and last snapshots from the peak of their
/// circular cross-correlation, refined by a parabola through the peak.
double estimate_speed(const Trajectory& traj, Execution exec = Execution::Parallel);

/// Where the M1 and M2 junctions sit at t = 0 and how fast they are advected.
struct AnchorTrack {
  double x_m1 = 0.0;
  double x_m2 = 0.0;
  double speed = 0.0;
  double wavelength = 0.0;
  double window_fraction = 0.05;
};

struct SteepeningPoint {
  double t;
  double near_m1;
  double near_m2;
};

/// Per-snapshot max |q[i+1] - q[i]| / dx within +/- window_fraction * wavelength
/// of each advected anchor.
std::vector<SteepeningPoint> steepening_metric(const Trajectory& traj, const AnchorTrack& track);

}  // namespace hornwave

namespace hornwave {

/// Smooth periodic test state: q = q_mean (1 + amplitude sin(2 pi x / length)),
/// m on the zero-source locus.
FieldState sinusoidal_state(std::size_t cells, double length, double amplitude, double q_mean,
                            const SourceParams& src, const GasConstants& gas);

/// Uniform state (q, m) on `cells` cells over `length`.
FieldState uniform_state(std::size_t cells, double length, double q, double m);

/// L1 distance between a coarse field and the pairwise average of a field with
/// twice as many cells.
double restricted_l1(const std::vector<double>& coarse, const std::vector<double>& fine, double dx_coarse);

}  // namespace hornwave
