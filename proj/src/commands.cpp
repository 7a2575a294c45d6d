#include "hornwave/commands.hpp"

#include <filesystem>
#include <string>
#include <vector>

#include "hornwave/errors.hpp"
#include "hornwave/validation.hpp"
#include "json.hpp"

namespace hornwave {

namespace {

using io::append_row;
using ordered_json = nlohmann::ordered_json;

double simulation_time(const RunConfig& c, const CompositeWave& w) {
  return c.t_end.value_or(0.1 * w.wavelength / w.velocities.A_star);
}

CompositeWave build_wave(const RunConfig& c) {
  return assemble_wave(c.q_star, c.q0, c.profile_samples, c.source, c.gas, c.wave);
}

ordered_json point_json(const PhasePoint& p) { return {{"q", p.q}, {"m", p.m}, {"u", p.u()}}; }

io::ArtifactSet run_artifacts(std::string_view command, const RunConfig& config, int& status) {
  status = kExitOk;
  if (command == "shape") return shape_artifacts(config);
  if (command == "roots") return roots_artifacts(config);
  if (command == "profile") return profile_artifacts(config);
  if (command == "simulate") return simulate_artifacts(config);
  if (command == "validate") return validate_artifacts(config, status);
  throw ConfigError("unknown command '" + std::string(command) + "'");
}

int run_sweep(const RunConfig& config, std::ostream& err) {
  const auto& grid = *config.sweep;
  const std::size_t n = grid.values.size();
  std::vector<int> codes(n, kExitOk);
  std::vector<std::string> messages(n);
  std::vector<std::string> dirs(n);
  const std::filesystem::path root = config.output_dir;

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    dirs[idx] = grid.parameter + "_" + std::to_string(idx);
    try {
      RawConfig raw = config.raw;
      raw.erase("sweep_param");
      raw.erase("sweep_values");
      raw.erase("sweep_min");
      raw.erase("sweep_max");
      raw.erase("sweep_count");
      raw[grid.parameter] = {io::format_real(grid.values[idx]), 0};
      const RunConfig point = build_config(raw);
      int status = kExitOk;
      const auto artifacts = run_artifacts(config.sweep_command, point, status);
      io::commit(root / dirs[idx], artifacts);
      codes[idx] = status;
    } catch (const std::exception& e) {
      codes[idx] = exit_code_for(e);
      messages[idx] = e.what();
    }
  }

  ordered_json manifest;
  manifest["parameter"] = grid.parameter;
  manifest["command"] = config.sweep_command;
  manifest["points"] = ordered_json::array();
  int worst = kExitOk;
  for (std::size_t i = 0; i < n; ++i) {
    manifest["points"].push_back({{"index", i},
                                  {"value", grid.values[i]},
                                  {"directory", dirs[i]},
                                  {"exit_code", codes[i]},
                                  {"error", messages[i]}});
    if (codes[i] != kExitOk) {
      err << "sweep point " << i << " (" << grid.parameter << " = " << io::format_real(grid.values[i])
          << "): " << (messages[i].empty() ? "checks failed" : messages[i]) << "\n";
      worst = std::max(worst, codes[i]);
    }
  }
  io::commit(root, {{"manifest.json", manifest.dump(2) + "\n"}});
  return worst;
}

}  // namespace

io::ArtifactSet shape_artifacts(const RunConfig& c) {
  const auto shape = sample_shape(c.duct, c.gas, c.shape_samples, c.duct_variant);
  std::string csv = "x,a,r\n";
  for (const auto& s : shape.samples) append_row(csv, {s.x, s.a, s.r});
  return {{"shape.csv", std::move(csv)}};
}

io::ArtifactSet roots_artifacts(const RunConfig& c) {
  const auto roots = solve_q12(c.q_star, c.q0, c.source, c.gas);
  const auto v = branch_velocities(c.q_star, roots.q1, roots.q2, c.u_star, c.gas.c0);
  const auto rh = rankine_hugoniot_check(c.q_star, c.q0, c.source, c.gas);
  ordered_json j;
  j["c0"] = c.gas.c0;
  j["D"] = c.source.D;
  j["q_star"] = c.q_star;
  j["q0"] = c.q0;
  j["u_star"] = c.u_star;
  j["R"] = roots.R;
  j["q1"] = roots.q1;
  j["q2"] = roots.q2;
  j["degenerate"] = roots.degenerate;
  j["velocities"] = {{"A1", v.A1}, {"A_star", v.A_star}, {"A2", v.A2}};
  j["rankine_hugoniot"] = {{"rate_rh", rh.rate_rh},
                           {"rate_m0", rh.rate_m0},
                           {"rate_align", rh.rate_align},
                           {"admissible", rh.admissible}};
  return {{"roots.json", j.dump(2) + "\n"}};
}

io::ArtifactSet profile_artifacts(const RunConfig& c) {
  const auto w = build_wave(c);
  std::string csv = "xi,q,m,u,branch\n";
  for (BranchId id : {BranchId::Rear, BranchId::Central, BranchId::Front}) {
    const auto& b = w.branch(id);
    const double off = w.offset(id);
    for (std::size_t i = (id == BranchId::Rear ? 0 : 1); i < b.samples.size(); ++i) {
      const auto& s = b.samples[i];
      csv += io::format_real(off + s.xi) + ',' + io::format_real(s.q) + ',' + io::format_real(s.m) + ',' +
             io::format_real(s.m / s.q) + ',' + to_string(id) + '\n';
    }
  }
  const auto lim = psi_prime_limit_report(reference_from_q(c.q_star, c.source, c.gas), c.source, c.gas);
  ordered_json j;
  j["anchors"] = {{"q_star", w.q_star}, {"q0", w.q0}, {"q1", w.q1}, {"q2", w.q2}};
  j["points"] = {{"M_star", point_json(w.M_star)},
                 {"M0", point_json(w.M0)},
                 {"M1", point_json(w.M1)},
                 {"M2", point_json(w.M2)}};
  j["velocities"] = {{"A1", w.velocities.A1}, {"A_star", w.velocities.A_star}, {"A2", w.velocities.A2}};
  j["extents"] = {{"rear", w.rear.extent}, {"central", w.central.extent}, {"front", w.front.extent}};
  j["wavelength"] = w.wavelength;
  j["frequency"] = w.frequency;
  j["closure_tol"] = w.closure_tol;
  j["psi_prime_limit"] = {{"lhopital", lim.lhopital},
                          {"numerical", lim.numerical},
                          {"alternative_form", lim.alternative},
                          {"lhopital_rel_error", lim.lhopital_rel_error},
                          {"alternative_rel_error", lim.alternative_rel_error}};
  return {{"profile.csv", std::move(csv)}, {"profile.json", j.dump(2) + "\n"}};
}

io::ArtifactSet simulate_artifacts(const RunConfig& c) {
  const auto w = build_wave(c);
  SolverConfig cfg = c.solver;
  cfg.t_end = simulation_time(c, w);
  const auto ic = wavetrain(w, c.n_periods, c.cells_per_period);
  const auto traj = simulate(ic, cfg, c.source, c.gas, c.snapshot_every);

  std::string st = "t,x,q,m,u\n";
  for (const auto& s : traj.snapshots) {
    for (std::size_t i = 0; i < s.size(); ++i) append_row(st, {s.t, s.x[i], s.q[i], s.m[i], s.m[i] / s.q[i]});
  }
  std::string ledger = "step,t,total_mass\n";
  for (const auto& r : traj.mass_ledger) append_row(ledger, {static_cast<double>(r.step), r.t, r.total_mass});
  return {{"spacetime.csv", std::move(st)}, {"mass.csv", std::move(ledger)}};
}

io::ArtifactSet validate_artifacts(const RunConfig& c, int& status) {
  const auto report = run_validation(c);
  status = report.all_pass() ? kExitOk : kExitNumerical;
  return {{"validate.json", to_json(report)}};
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return kExitConfig;
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  return kExitNumerical;
}

int run_command(std::string_view command, const RunConfig& config, std::ostream& err) {
  try {
    if (command == "sweep") {
      if (!config.sweep) throw ConfigError("sweep requires 'sweep_param' and its values");
      return run_sweep(config, err);
    }
    int status = kExitOk;
    const auto artifacts = run_artifacts(command, config, status);
    io::commit(config.output_dir, artifacts);
    if (status != kExitOk) err << command << ": one or more checks failed, see the report\n";
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace hornwave
