#include "hornwave/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hornwave/errors.hpp"
#include "hornwave/random.hpp"
#include "json.hpp"

namespace hornwave {

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

class Collector {
 public:
  void check(std::string name, bool pass, double value, double threshold, std::string detail = {}) {
    report.checks.push_back({std::move(name), pass, value, threshold, std::move(detail)});
  }
  // passes when value <= threshold
  void at_most(std::string name, double value, double threshold, std::string detail = {}) {
    check(std::move(name), value <= threshold, value, threshold, std::move(detail));
  }
  void note(std::string name, double value, std::string detail = {}) {
    report.notes.push_back({std::move(name), value, std::move(detail)});
  }
  ValidationReport report;
};

void gas_checks(const RunConfig& c, Collector& out) {
  const auto& gas = c.gas;
  out.at_most("gas.c0_definition", rel(gas.c0 * gas.c0, gas.gamma * gas.K0 * gas.T0), 1e-14);
  out.at_most("gas.c0_at_300K", std::abs(sound_speed(300.0, gas) - 347.225), 1e-3, "m/s");
  UniformSource draw(c.seed);
  double worst_locus = 0.0;
  bool partition = true;
  for (std::size_t i = 0; i < c.random_draws; ++i) {
    const double q = draw(0.01, 2.0);
    const double m0 = s_zero_locus(q, c.source, gas);
    const double scale = c.source.k * c.source.D * c.source.D * std::pow(q, gas.gamma);
    worst_locus = std::max(worst_locus, std::abs(source(q, m0, c.source, gas)) / scale);
    partition = partition && source(q, m0 * 1.01, c.source, gas) > 0.0 && source(q, m0 * 0.99, c.source, gas) < 0.0;
  }
  out.at_most("gas.zero_locus", worst_locus, 1e-12, "|S| / (k D^2 q^gamma) on S0");
  out.check("gas.sign_partition", partition, partition ? 1.0 : 0.0, 1.0);
}

void duct_checks(const RunConfig& c, Collector& out) {
  DuctParams horn = c.duct;
  const auto shape = sample_shape(horn, c.gas, 1001, DuctVariant::Horn);
  const double dev = validate_shape(shape, horn, c.gas);
  out.at_most("duct.horn_law_1001", dev, 1e-5, "max relative deviation of a'/a^gamma");
  const double dev_fine = validate_shape(sample_shape(horn, c.gas, 2001, DuctVariant::Horn), horn, c.gas);
  out.check("duct.horn_law_second_order", dev / dev_fine >= 3.5, dev / dev_fine, 3.5, "error ratio 1001 -> 2001 samples");
  const double dev_exp = validate_shape(sample_shape(horn, c.gas, 1001, DuctVariant::Exponential), horn, c.gas);
  out.at_most("duct.exponential_law_1001", dev_exp, 1e-5);
  bool increasing = true;
  for (std::size_t i = 1; i < shape.samples.size(); ++i) {
    increasing = increasing && shape.samples[i].a > shape.samples[i - 1].a;
  }
  out.check("duct.horn_increasing", increasing, increasing ? 1.0 : 0.0, 1.0);
}

void root_checks(const RunConfig& c, Collector& out) {
  UniformSource draw(c.seed + 1);
  double worst_sum = 0.0, worst_prod = 0.0;
  bool ordering = true, velocities = true;
  std::size_t accepted = 0, attempts = 0;
  while (accepted < c.random_draws && attempts < 20 * c.random_draws) {
    ++attempts;
    const auto gas = GasConstants::make(draw(250.0, 350.0));
    const double q_star = draw(0.05, 1.0);
    const double u_star = draw(1.0, 60.0);
    const SourceParams src{c.source.k, source_constant_for(q_star, u_star, gas)};
    const double q0 = q_star * (1.0 + draw(1e-4, 0.3));
    Q12Roots r;
    try {
      r = solve_q12(q_star, q0, src, gas);
    } catch (const ParameterRegimeError&) {
      continue;
    }
    ++accepted;
    worst_sum = std::max(worst_sum, rel(r.q1 + r.q2, r.R));
    worst_prod = std::max(worst_prod, rel(r.q1 * r.q2, q_star * q0));
    ordering = ordering && r.q2 < q_star && q_star < q0 && q0 < r.q1;
    const auto v = branch_velocities(q_star, r.q1, r.q2, u_star, gas.c0);
    velocities = velocities && v.A1 > v.A_star && v.A_star > v.A2;
  }
  out.check("roots.accepted_draws", accepted >= c.random_draws, static_cast<double>(accepted),
            static_cast<double>(c.random_draws));
  out.at_most("roots.vieta_sum", worst_sum, 1e-12);
  out.at_most("roots.vieta_product", worst_prod, 1e-12);
  out.check("roots.ordering", ordering, ordering ? 1.0 : 0.0, 1.0, "q2 < q* < q0 < q1 on every accepted draw");
  out.check("roots.velocity_ordering", velocities, velocities ? 1.0 : 0.0, 1.0, "A1 > A* > A2");

  const auto degenerate = solve_q12(c.q_star, c.q_star, c.source, c.gas);
  out.at_most("roots.degenerate_double_root",
              std::max(rel(degenerate.q1, c.q_star), rel(degenerate.q2, c.q_star)), 1e-12);

  // A1, A2 -> A* as q0 -> q*
  double prev = std::numeric_limits<double>::infinity();
  bool shrinking = true;
  for (int j = 1; j <= 6; ++j) {
    const double q0 = c.q_star * (1.0 + std::pow(10.0, -j));
    const auto r = solve_q12(c.q_star, q0, c.source, c.gas);
    const auto v = branch_velocities(c.q_star, r.q1, r.q2, c.u_star, c.gas.c0);
    const double gap = std::max(v.A1 - v.A_star, v.A_star - v.A2);
    shrinking = shrinking && gap < prev;
    prev = gap;
  }
  out.check("roots.velocity_collapse", shrinking && prev < 1e-2 * c.gas.c0, prev, 1e-2 * c.gas.c0,
            "max(A1 - A*, A* - A2) at q0 = q*(1 + 1e-6)");
}

void wave_checks(const RunConfig& c, const CompositeWave& w, Collector& out) {
  const auto ref = reference_from_q(c.q_star, c.source, c.gas);
  const auto lim = psi_prime_limit_report(ref, c.source, c.gas);
  out.at_most("wave.psi_limit_vs_numerical", lim.lhopital_rel_error, 1e-6);
  out.note("wave.psi_limit_lhopital", lim.lhopital);
  out.note("wave.psi_limit_numerical", lim.numerical);
  out.note("wave.psi_limit_alternative_form", lim.alternative,
           lim.alternative_rel_error <= 1e-6 ? "alternative closed form matches the numerical limit"
                                             : "alternative closed form does NOT match the numerical limit");

  const double m0_front = w.front.reference.line(w.q0);
  out.at_most("wave.m0_consistency", rel(w.M0.m, m0_front), 1e-10);
  out.at_most("wave.m0_on_locus", rel(w.M0.m, s_zero_locus(w.q0, c.source, c.gas)), 1e-10);
  const bool anchors = w.q2 < w.q_star && w.q_star < w.q0 && w.q0 < w.q1;
  out.check("wave.anchor_ordering", anchors, anchors ? 1.0 : 0.0, 1.0);
  const double closure = std::max(rel(w.at(0.0).q, w.q0), rel(w.front.samples.back().q, w.q0));
  out.at_most("wave.periodic_closure", closure, 1.000001 * c.wave.closure_tol);

  // psi' sign structure
  bool signs = true;
  for (int j = 1; j < 200; ++j) {
    const double t = j / 200.0;
    const double qc = w.q2 + t * (w.q1 - w.q2);
    if (std::abs(qc - w.q_star) > 1e-6 * w.q_star) signs = signs && psi_prime(qc, ref, c.source, c.gas) < 0.0;
    signs = signs && psi_prime(w.q0 + t * (w.q1 - w.q0), w.rear.reference, c.source, c.gas) > 0.0;
    signs = signs && psi_prime(w.q2 + t * (w.q0 - w.q2), w.front.reference, c.source, c.gas) > 0.0;
  }
  out.check("wave.psi_sign_structure", signs, signs ? 1.0 : 0.0, 1.0);

  const auto res = pde_residual(w, c.probes, c.source, c.gas);
  out.check("wave.mass_residual_zero", res.mass == 0.0, res.mass, 0.0);
  out.at_most("wave.momentum_residual", res.momentum, 1e-10, "normalised by k D^2 q^gamma");

  const auto rh = rankine_hugoniot_check(c.q_star, c.q0, c.source, c.gas);
  out.at_most("rh.rate_m0_equals_rate_align", rel(rh.rate_m0, rh.rate_align), 1e-12);
  out.check("rh.no_shock_for_distinct_anchors", !rh.admissible || c.q0 == c.q_star, rh.rate_rh, rh.rate_m0);
  const auto rh_deg = rankine_hugoniot_check(c.q_star, c.q_star, c.source, c.gas);
  out.check("rh.degenerate_admissible", rh_deg.admissible, rh_deg.rate_rh, rh_deg.rate_m0);

  out.note("wave.wavelength", w.wavelength, "m");
  out.note("wave.frequency", w.frequency, "Hz");
}

void solver_checks(const RunConfig& c, const CompositeWave& w, Collector& out) {
  SolverConfig cfg = c.solver;

  // mass conservation, 1000 steps, 1024 cells
  {
    FieldState s = wavetrain(w, 1, 1024);
    const double m0 = total_mass(s);
    for (int i = 0; i < 1000; ++i) s = step(s, cfg, c.source, c.gas);
    out.at_most("fv.mass_conservation", rel(total_mass(s), m0), 1e-12, "1024 cells, 1000 steps");
  }
  // momentum ledger equals the integrated source
  {
    SolverConfig cm = cfg;
    cm.source_coupling = SourceCoupling::Explicit;
    cm.t_end = 0.25 * w.wavelength / w.velocities.A_star;
    const auto traj = simulate(wavetrain(w, 1, 512), cm, c.source, c.gas, 1000000);
    const double dm = total_momentum(traj.snapshots.back()) - total_momentum(traj.snapshots.front());
    out.at_most("fv.momentum_balance", std::abs(dm + traj.integrated_source) /
                                           std::max(std::abs(traj.integrated_source), 1e-300),
                1e-8, "relative mismatch of momentum change vs -integral S");
  }
  // Galilean steady state at k = 0, D = 0
  {
    const SourceParams none{0.0, 0.0};
    FieldState s = uniform_state(64, 10.0, 0.2, 0.2 * 15.0);
    const FieldState s1 = step(s, cfg, none, c.gas);
    double dev = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      dev = std::max({dev, std::abs(s1.q[i] - s.q[i]), std::abs(s1.m[i] - s.m[i])});
    }
    out.check("fv.galilean_steady_state", dev == 0.0, dev, 0.0);
  }
  // self-convergence on smooth data
  {
    SolverConfig cs = cfg;
    cs.t_end = 0.1;
    const double length = 200.0;
    std::vector<std::vector<double>> q;
    for (std::size_t n : {512u, 1024u, 2048u}) {
      const auto traj = simulate(sinusoidal_state(n, length, 0.01, c.q_star, c.source, c.gas), cs, c.source, c.gas,
                                 1000000);
      q.push_back(traj.snapshots.back().q);
    }
    const double e1 = restricted_l1(q[0], q[1], length / 512.0);
    const double e2 = restricted_l1(q[1], q[2], length / 1024.0);
    out.check("fv.self_convergence_order", std::log2(e1 / e2) >= 0.8, std::log2(e1 / e2), 0.8);
  }
  // propagation speed and steepening at the configured resolution
  {
    SolverConfig cp = cfg;
    cp.t_end = c.t_end.value_or(0.1 * w.wavelength / w.velocities.A_star);
    const auto traj = simulate(wavetrain(w, 1, c.cells_per_period), cp, c.source, c.gas, c.snapshot_every);
    const double speed = estimate_speed(traj, cfg.execution);
    out.at_most("fv.propagation_speed", rel(speed, w.velocities.A_star), 0.02,
                "relative deviation of the cross-correlation speed from A*");
    out.note("fv.estimated_speed", speed, "m/s");
    const AnchorTrack track{w.offset(BranchId::Central), w.offset(BranchId::Front), w.velocities.A_star,
                            w.wavelength};
    const auto steep = steepening_metric(traj, track);
    out.note("fv.steepening_m1_initial", steep.front().near_m1);
    out.note("fv.steepening_m1_final", steep.back().near_m1);
    out.note("fv.steepening_m2_initial", steep.front().near_m2);
    out.note("fv.steepening_m2_final", steep.back().near_m2);
  }
  // CFL safety over one period
  {
    SolverConfig cc = cfg;
    cc.cfl = 0.9;
    cc.t_end = w.wavelength / w.velocities.A_star;
    bool ok = true;
    try {
      simulate(wavetrain(w, 1, 1024), cc, c.source, c.gas, 1000000);
    } catch (const PositivityError&) {
      ok = false;
    }
    out.check("fv.cfl_safety_one_period", ok, ok ? 1.0 : 0.0, 1.0);
  }
}

}  // namespace

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

ValidationReport run_validation(const RunConfig& config) {
  Collector out;
  gas_checks(config, out);
  duct_checks(config, out);
  root_checks(config, out);
  const auto wave = assemble_wave(config.q_star, config.q0, config.profile_samples, config.source, config.gas,
                                  config.wave);
  wave_checks(config, wave, out);
  {
    const auto train = wavetrain(wave, 2, 256);
    double worst = 0.0;
    for (std::size_t i = 0; i < 256; ++i) worst = std::max(worst, std::abs(train.q[i] - train.q[i + 256]));
    out.at_most("wave.wavetrain_periodicity", worst, 1e-12);
  }
  solver_checks(config, wave, out);
  return out.report;
}

std::string to_json(const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["all_pass"] = report.all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"threshold", c.threshold},
                           {"detail", c.detail}});
  }
  j["notes"] = nlohmann::ordered_json::array();
  for (const auto& n : report.notes) {
    j["notes"].push_back({{"name", n.name}, {"value", n.value}, {"detail", n.detail}});
  }
  return j.dump(2) + "\n";
}

}  // namespace hornwave
