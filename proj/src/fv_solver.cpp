#include "hornwave/fv_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "hornwave/errors.hpp"

namespace hornwave {

void FieldState::validate(double positivity_floor) const {
  if (q.size() < 8) throw DomainError("FieldState: need at least 8 cells");
  if (m.size() != q.size() || x.size() != q.size()) throw DomainError("FieldState: array lengths differ");
  if (!(dx > 0.0)) throw DomainError("FieldState: dx must be positive");
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!(q[i] > positivity_floor)) {
      throw PositivityError("FieldState: q[" + std::to_string(i) + "] = " + std::to_string(q[i]) +
                            " is not above the positivity floor");
    }
  }
}

double total_mass(const FieldState& state) {
  double s = 0.0;
  for (double v : state.q) s += v;
  return s * state.dx;
}

double total_momentum(const FieldState& state) {
  double s = 0.0;
  for (double v : state.m) s += v;
  return s * state.dx;
}

void SolverConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw DomainError("cfl must lie in (0, 1]");
  if (!(t_end >= 0.0)) throw DomainError("t_end must be non-negative");
  if (!(positivity_floor >= 0.0)) throw DomainError("positivity_floor must be non-negative");
}

kernels::FluxPair physical_flux(double q, double m, double c0) {
  if (!(q > 0.0)) throw DomainError("physical_flux: q must be positive");
  return kernels::physical_flux(q, m, c0);
}

double max_wave_speed(const FieldState& state, double c0, Execution exec) {
  return exec == Execution::Serial ? kernels::serial::max_wave_speed(state.q, state.m, c0)
                                   : kernels::omp::max_wave_speed(state.q, state.m, c0);
}

double stable_dt(const FieldState& state, const SolverConfig& config, double c0) {
  return config.cfl * state.dx / max_wave_speed(state, c0, config.execution);
}

namespace {

struct KernelSet {
  decltype(&kernels::serial::interface_fluxes) fluxes;
  decltype(&kernels::serial::conservative_update) update;
  decltype(&kernels::serial::apply_source) source;
  decltype(&kernels::serial::count_below) count_below;
};

KernelSet kernel_set(Execution exec) {
  if (exec == Execution::Serial) {
    return {kernels::serial::interface_fluxes, kernels::serial::conservative_update,
            kernels::serial::apply_source, kernels::serial::count_below};
  }
  return {kernels::omp::interface_fluxes, kernels::omp::conservative_update,
          kernels::omp::apply_source, kernels::omp::count_below};
}

void source_substep(const KernelSet& k, FieldState& s, double dt, const kernels::SourceCoefficients& c) {
  const std::vector<double> m_old = s.m;
  k.source(s.q, m_old, dt, c, s.m);
}

}  // namespace

FieldState step(const FieldState& state, const SolverConfig& config, const SourceParams& src,
                const GasConstants& gas, std::optional<double> dt) {
  const double c0 = gas.c0;
  const double limit = stable_dt(state, config, c0);
  double h = limit;
  if (dt) {
    if (!(*dt > 0.0)) throw CflError("step: time step must be positive");
    if (*dt > limit * (1.0 + 1e-12)) {
      std::ostringstream os;
      os.precision(17);
      os << "step: dt = " << *dt << " exceeds the CFL limit " << limit;
      throw CflError(os.str());
    }
    h = *dt;
  }

  const auto k = kernel_set(config.execution);
  const kernels::SourceCoefficients coeffs{src.k, src.D, gas.gamma};
  const std::size_t n = state.size();

  FieldState work = state;
  if (config.source_coupling == SourceCoupling::Strang) source_substep(k, work, 0.5 * h, coeffs);

  std::vector<double> fq(n), fm(n);
  k.fluxes(work.q, work.m, c0, config.flux, fq, fm);
  FieldState next = work;
  k.update(work.q, work.m, fq, fm, h / state.dx, next.q, next.m);

  if (config.source_coupling == SourceCoupling::Explicit) {
    k.source(state.q, state.m, h, coeffs, next.m);
  } else {
    source_substep(k, next, 0.5 * h, coeffs);
  }
  next.t = state.t + h;

  if (const auto bad = k.count_below(next.q, config.positivity_floor); bad > 0) {
    throw PositivityError("step: " + std::to_string(bad) + " cell(s) fell below the positivity floor at t = " +
                          std::to_string(next.t));
  }
  return next;
}

Trajectory simulate(const FieldState& ic, const SolverConfig& config, const SourceParams& src,
                    const GasConstants& gas, std::size_t snapshot_every) {
  config.validate();
  ic.validate(config.positivity_floor);
  if (snapshot_every == 0) throw DomainError("simulate: snapshot_every must be at least 1");

  Trajectory traj;
  traj.snapshots.push_back(ic);
  traj.mass_ledger.push_back({0, ic.t, total_mass(ic)});
  const double t_stop = ic.t + config.t_end;

  FieldState state = ic;
  std::size_t n = 0;
  while (state.t < t_stop) {
    double h = stable_dt(state, config, gas.c0);
    bool last = false;
    if (state.t + h >= t_stop) {
      h = t_stop - state.t;
      last = true;
    }
    if (config.source_coupling == SourceCoupling::Explicit) {
      double s = 0.0;
      for (std::size_t i = 0; i < state.size(); ++i) {
        s += kernels::friction_source(state.q[i], state.m[i], src.k, src.D, gas.gamma);
      }
      traj.integrated_source += h * s * state.dx;
    }
    state = step(state, config, src, gas, h);
    if (last) state.t = t_stop;
    ++n;
    traj.mass_ledger.push_back({n, state.t, total_mass(state)});
    if (last || n % snapshot_every == 0) traj.snapshots.push_back(state);
  }
  traj.steps = n;
  return traj;
}

double estimate_speed(const Trajectory& traj, Execution exec) {
  if (traj.snapshots.size() < 2) throw DomainError("estimate_speed: need at least two snapshots");
  const auto& first = traj.snapshots.front();
  const auto& last = traj.snapshots.back();
  const std::size_t n = first.size();
  if (last.size() != n || last.dx != first.dx) throw DomainError("estimate_speed: snapshot grids differ");
  const double elapsed = last.t - first.t;
  if (!(elapsed > 0.0)) throw DomainError("estimate_speed: snapshots must be separated in time");

  auto centred = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    std::vector<double> out(v.size());
    double energy = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] = v[i] - mean;
      energy += out[i] * out[i];
    }
    return std::make_pair(out, energy);
  };
  const auto [a, ea] = centred(first.q);
  const auto [b, eb] = centred(last.q);
  double scale = 0.0;
  for (double v : first.q) scale = std::max(scale, std::abs(v));
  const double floor = 1e-24 * scale * scale * static_cast<double>(n);
  if (!(ea > floor) || !(eb > floor)) {
    throw NumericalError("estimate_speed: field is constant, the speed is undefined");
  }

  std::vector<double> corr(n);
  if (exec == Execution::Serial) {
    kernels::serial::circular_correlation(a, b, corr);
  } else {
    kernels::omp::circular_correlation(a, b, corr);
  }
  const std::size_t peak = static_cast<std::size_t>(std::max_element(corr.begin(), corr.end()) - corr.begin());
  const double cm = corr[(peak + n - 1) % n];
  const double c = corr[peak];
  const double cp = corr[(peak + 1) % n];
  const double curvature = cm - 2.0 * c + cp;
  const double frac = curvature < 0.0 ? 0.5 * (cm - cp) / curvature : 0.0;
  double shift = static_cast<double>(peak) + frac;
  if (shift > 0.5 * static_cast<double>(n)) shift -= static_cast<double>(n);
  if (std::abs(shift) >= 0.5 * static_cast<double>(n) - 1.0) {
    throw NumericalError("estimate_speed: displacement is ambiguous (near half the domain); use a shorter t_end");
  }
  return shift * first.dx / elapsed;
}

std::vector<SteepeningPoint> steepening_metric(const Trajectory& traj, const AnchorTrack& track) {
  if (traj.snapshots.empty()) throw DomainError("steepening_metric: empty trajectory");
  std::vector<SteepeningPoint> out;
  out.reserve(traj.snapshots.size());
  const double half_window = track.window_fraction * track.wavelength;
  for (const auto& s : traj.snapshots) {
    const double length = s.domain_length();
    if (2.0 * half_window >= length) throw DomainError("steepening_metric: window falls off the domain");
    const std::size_t n = s.size();
    auto window_max = [&](double anchor0) {
      const double centre = anchor0 + track.speed * (s.t - traj.snapshots.front().t);
      double best = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double face = s.x[i] + 0.5 * s.dx;
        double d = std::fmod(face - centre, length);
        if (d > 0.5 * length) d -= length;
        if (d < -0.5 * length) d += length;
        if (std::abs(d) > half_window) continue;
        const double slope = std::abs(s.q[(i + 1) % n] - s.q[i]) / s.dx;
        best = std::max(best, slope);
      }
      return best;
    };
    out.push_back({s.t, window_max(track.x_m1), window_max(track.x_m2)});
  }
  return out;
}

}  // namespace hornwave

namespace hornwave {

FieldState sinusoidal_state(std::size_t cells, double length, double amplitude, double q_mean,
                            const SourceParams& src, const GasConstants& gas) {
  FieldState s;
  s.dx = length / static_cast<double>(cells);
  s.x.resize(cells);
  s.q.resize(cells);
  s.m.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    s.x[i] = (static_cast<double>(i) + 0.5) * s.dx;
    s.q[i] = q_mean * (1.0 + amplitude * std::sin(2.0 * std::numbers::pi * s.x[i] / length));
    s.m[i] = s_zero_locus(s.q[i], src, gas);
  }
  return s;
}

FieldState uniform_state(std::size_t cells, double length, double q, double m) {
  FieldState s;
  s.dx = length / static_cast<double>(cells);
  s.x.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) s.x[i] = (static_cast<double>(i) + 0.5) * s.dx;
  s.q.assign(cells, q);
  s.m.assign(cells, m);
  return s;
}

double restricted_l1(const std::vector<double>& coarse, const std::vector<double>& fine, double dx_coarse) {
  if (fine.size() != 2 * coarse.size()) throw DomainError("restricted_l1: fine grid must have twice the cells");
  double s = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    s += std::abs(coarse[i] - 0.5 * (fine[2 * i] + fine[2 * i + 1]));
  }
  return s * dx_coarse;
}

}  // namespace hornwave
