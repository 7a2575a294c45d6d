#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "hornwave/errors.hpp"
#include "hornwave/random.hpp"
#include "hornwave/wave_builder.hpp"
#include "oracles.hpp"

using namespace hornwave;

namespace {

struct Defaults {
  GasConstants gas = GasConstants::make();
  SourceParams src{0.01, source_constant_for(0.2, 10.0, GasConstants::make())};
  double q_star = 0.2;
  double q0 = 0.21;
};

const CompositeWave& default_wave() {
  static const CompositeWave w = [] {
    Defaults d;
    return assemble_wave(d.q_star, d.q0, 1001, d.src, d.gas);
  }();
  return w;
}

}  // namespace

TEST_SUITE("wave_builder") {

TEST_CASE("reference on the locus") {
  Defaults d;
  const auto ref = reference_from_q(0.2, d.src, d.gas);
  CHECK(ref.on_locus);
  CHECK(ref.point.u() == doctest::Approx(10.0).epsilon(1e-13));
  CHECK(ref.A == doctest::Approx(357.225).epsilon(1e-5));
  CHECK(ref.B == doctest::Approx(69.445).epsilon(1e-5));
  CHECK(std::abs(source(ref.point.q, ref.point.m, d.src, d.gas)) <= 1e-12);
  CHECK_THROWS_AS(reference_from_q(0.0, d.src, d.gas), DomainError);
}

TEST_CASE("psi' against the substituted momentum balance") {
  Defaults d;
  const oracle::Model model;
  const auto& w = default_wave();
  for (const WaveBranch* b : {&w.rear, &w.central, &w.front}) {
    for (int j = 1; j < 40; ++j) {
      const double q = b->q_from + (b->q_to - b->q_from) * j / 40.0;
      const double got = psi_prime(q, b->reference, d.src, d.gas);
      const double want = static_cast<double>(oracle::dxi_dq(model, b->reference.A, b->reference.B, q));
      CHECK(got == doctest::Approx(want).epsilon(1e-9));
    }
  }
}

TEST_CASE("psi' signs") {
  Defaults d;
  const auto ref = reference_from_q(0.2, d.src, d.gas);
  CHECK(psi_prime(0.2 * (1 - 1e-3), ref, d.src, d.gas) < 0.0);
  CHECK(psi_prime(0.2 * (1 + 1e-3), ref, d.src, d.gas) < 0.0);
  const auto& w = default_wave();
  const auto ref1 = w.rear.reference;
  CHECK(std::abs(psi_prime(w.q1, ref1, d.src, d.gas)) <= 1e-12);
  CHECK(psi_prime(0.5 * (w.q0 + w.q1), ref1, d.src, d.gas) > 0.0);
  CHECK(psi_prime(0.5 * (w.q0 + w.q2), w.front.reference, d.src, d.gas) > 0.0);
}

TEST_CASE("removable value at q* matches the numerical limit") {
  Defaults d;
  const auto ref = reference_from_q(0.2, d.src, d.gas);
  const double lhopital = psi_prime(0.2, ref, d.src, d.gas);
  CHECK(lhopital == psi_prime_limit(ref, d.src, d.gas));
  const double oracle_limit = static_cast<double>(oracle::limit_at_qstar(oracle::Model{}));
  CHECK(std::abs(lhopital - oracle_limit) <= 1e-6 * std::abs(oracle_limit));
  CHECK(lhopital == doctest::Approx(-3543.6902).epsilon(1e-7));
  // just off q* the value is continuous with the limit
  CHECK(psi_prime(0.2 * (1 + 1e-9), ref, d.src, d.gas) == doctest::Approx(lhopital).epsilon(1e-7));

  const auto report = psi_prime_limit_report(ref, d.src, d.gas);
  CHECK(report.lhopital_rel_error <= 1e-6);
  CHECK(report.alternative_rel_error > 1.0);
}

TEST_CASE("anchor roots") {
  Defaults d;
  const auto r = solve_q12(0.2, 0.21, d.src, d.gas);
  const auto o = oracle::anchor_roots(oracle::Model{}, 0.21L);
  CHECK(r.R == doctest::Approx(static_cast<double>(o.R)).epsilon(1e-13));
  CHECK(r.q1 == doctest::Approx(static_cast<double>(o.q1)).epsilon(1e-12));
  CHECK(r.q2 == doctest::Approx(static_cast<double>(o.q2)).epsilon(1e-12));
  CHECK(r.R == doctest::Approx(0.41979).epsilon(1e-4));
  CHECK(r.q1 == doctest::Approx(0.25523).epsilon(1e-4));
  CHECK(r.q2 == doctest::Approx(0.16455).epsilon(1e-4));
  CHECK(r.q1 * r.q2 == doctest::Approx(0.042).epsilon(1e-13));
  CHECK_FALSE(r.degenerate);
}

TEST_CASE("degenerate and invalid root cases") {
  Defaults d;
  const auto r = solve_q12(0.2, 0.2, d.src, d.gas);
  CHECK(r.degenerate);
  CHECK(r.q1 == 0.2);
  CHECK(r.q2 == 0.2);
  CHECK(r.R == doctest::Approx(0.4).epsilon(1e-14));
  CHECK_THROWS_AS(solve_q12(0.2, 0.19, d.src, d.gas), ParameterRegimeError);
  CHECK_THROWS_AS(assemble_wave(0.2, 0.2, 101, d.src, d.gas), DomainError);
}

TEST_CASE("Vieta identities over random draws") {
  UniformSource rng(7);
  int accepted = 0;
  for (int i = 0; i < 500; ++i) {
    const double T0 = rng(250.0, 350.0);
    const double u_star = rng(1.0, 40.0);
    const double q_star = rng(0.05, 1.0);
    const double q0 = q_star * (1.0 + rng(1e-6, 0.2));
    const auto gas = GasConstants::make(T0);
    const SourceParams src{rng(1e-3, 0.1), source_constant_for(q_star, u_star, gas)};
    Q12Roots r;
    try {
      r = solve_q12(q_star, q0, src, gas);
    } catch (const ParameterRegimeError&) {
      continue;
    }
    ++accepted;
    CHECK(std::abs(r.q1 + r.q2 - r.R) <= 1e-12 * r.R);
    CHECK(std::abs(r.q1 * r.q2 - q_star * q0) <= 1e-12 * q_star * q0);
    CHECK(r.q2 < q_star);
    CHECK(q0 < r.q1);
    const auto v = branch_velocities(q_star, r.q1, r.q2, u_star, gas.c0);
    CHECK(v.A1 > v.A_star);
    CHECK(v.A_star > v.A2);
  }
  CHECK(accepted > 400);
}

TEST_CASE("branch velocities") {
  Defaults d;
  const auto r = solve_q12(0.2, 0.21, d.src, d.gas);
  const auto v = branch_velocities(0.2, r.q1, r.q2, 10.0, d.gas.c0);
  CHECK(v.A1 == doctest::Approx(432.4).epsilon(2e-4));
  CHECK(v.A_star == doctest::Approx(357.225).epsilon(1e-5));
  CHECK(v.A2 == doctest::Approx(282.4).epsilon(2e-4));
  double prev = INFINITY;
  for (int j = 1; j <= 6; ++j) {
    const double q0 = 0.2 * (1.0 + std::pow(10.0, -j));
    const auto rj = solve_q12(0.2, q0, d.src, d.gas);
    const auto vj = branch_velocities(0.2, rj.q1, rj.q2, 10.0, d.gas.c0);
    CHECK(vj.A1 - vj.A_star < prev);
    prev = vj.A1 - vj.A_star;
  }
  CHECK(prev < 1e-3 * v.A_star);
  CHECK(v.A1 - v.A_star > prev);
}

TEST_CASE("composite wave layout") {
  const auto& w = default_wave();
  CHECK(w.q2 < w.q_star);
  CHECK(w.q_star < w.q0);
  CHECK(w.q0 < w.q1);
  CHECK(w.rear.monotone == Monotone::Increasing);
  CHECK(w.central.monotone == Monotone::Decreasing);
  CHECK(w.front.monotone == Monotone::Increasing);
  CHECK(w.wavelength == doctest::Approx(w.rear.extent + w.central.extent + w.front.extent));
  CHECK(w.frequency == doctest::Approx(w.velocities.A_star / w.wavelength));
  CHECK(w.M0.m == doctest::Approx(w.front.reference.line(w.q0)).epsilon(1e-10));
  // along the central branch q falls with xi
  for (std::size_t i = 1; i < w.central.samples.size(); ++i) {
    CHECK(w.central.samples[i].q <= w.central.samples[i - 1].q);
    CHECK(w.central.samples[i].xi > w.central.samples[i - 1].xi);
  }
}

TEST_CASE("extents converge under tolerance halving") {
  Defaults d;
  WaveOptions coarse;
  WaveOptions fine;
  fine.branch.tolerance = 0.5 * coarse.branch.tolerance;
  const auto a = assemble_wave(d.q_star, d.q0, 101, d.src, d.gas, coarse);
  const auto b = assemble_wave(d.q_star, d.q0, 101, d.src, d.gas, fine);
  for (auto id : {BranchId::Rear, BranchId::Central, BranchId::Front}) {
    const double ea = a.branch(id).extent;
    const double eb = b.branch(id).extent;
    CHECK(std::abs(ea - eb) <= 1e-8 * eb);
  }
}

TEST_CASE("profile slope follows psi'") {
  // finite differences of the built profile against the oracle slope
  Defaults d;
  const oracle::Model model;
  const auto& w = default_wave();
  for (const WaveBranch* b : {&w.rear, &w.central, &w.front}) {
    for (int j = 1; j < 10; ++j) {
      const double xi = b->extent * j / 10.0;
      const double h = 1e-4 * b->extent;
      const double slope = (b->q_at(xi + h) - b->q_at(xi - h)) / (2 * h);
      const double q = b->q_at(xi);
      const double want = 1.0 / static_cast<double>(oracle::dxi_dq(model, b->reference.A, b->reference.B, q));
      CHECK(slope == doctest::Approx(want).epsilon(1e-3));
    }
  }
}

TEST_CASE("PDE residuals") {
  Defaults d;
  const auto& w = default_wave();
  const auto r = pde_residual(w, 100, d.src, d.gas);
  CHECK(r.mass == 0.0);
  CHECK(r.momentum <= 1e-10);
  CHECK_THROWS_AS(residual_at(w.rear, w.q1, d.src, d.gas), ProbePlacementError);
  CHECK_THROWS_AS(residual_at(w.central, 0.5, d.src, d.gas), ProbePlacementError);
}

TEST_CASE("Rankine-Hugoniot degeneracy") {
  Defaults d;
  const auto r = rankine_hugoniot_check(0.2, 0.21, d.src, d.gas);
  CHECK(r.rate_rh == doctest::Approx(1694.2).epsilon(1e-4));
  CHECK(r.rate_m0 == doctest::Approx(1653.45).epsilon(1e-5));
  CHECK(r.rate_m0 == doctest::Approx(r.rate_align).epsilon(1e-14));
  CHECK_FALSE(r.admissible);
  const auto flat = rankine_hugoniot_check(0.2, 0.2, d.src, d.gas);
  CHECK(flat.admissible);
  CHECK(flat.rate_rh == doctest::Approx(d.gas.c0 / 0.2).epsilon(1e-14));
  CHECK_FALSE(rankine_hugoniot_check(0.2, 0.2 * (1 + 1e-8), d.src, d.gas).admissible);
  CHECK(rankine_hugoniot_check(0.2, 0.2 * (1 + 1e-12), d.src, d.gas).admissible);
}

TEST_CASE("periodic evaluation and wavetrain") {
  const auto& w = default_wave();
  for (double xi : {0.0, 10.0, 2800.0, 5000.0}) {
    const auto a = w.at(xi);
    const auto b = w.at(xi + 3.0 * w.wavelength);
    CHECK(a.q == doctest::Approx(b.q).epsilon(1e-9));
    CHECK(a.branch == b.branch);
  }
  CHECK(w.at(1.0).branch == BranchId::Rear);
  CHECK(w.at(w.offset(BranchId::Central) + 1.0).branch == BranchId::Central);
  CHECK(w.at(w.wavelength - 1.0).branch == BranchId::Front);

  const auto one = wavetrain(w, 1, 256);
  const auto two = wavetrain(w, 2, 256);
  REQUIRE(two.size() == 512);
  for (std::size_t i = 0; i < 256; ++i) {
    const auto v = w.at(one.x[i]);
    CHECK(one.q[i] == v.q);
    CHECK(two.q[i] == two.q[i + 256]);
    CHECK(two.m[i] == two.m[i + 256]);
  }
  CHECK(one.domain_length() == doctest::Approx(w.wavelength).epsilon(1e-14));
}

TEST_CASE("branch integration rejects a pole inside the span") {
  Defaults d;
  const auto& w = default_wave();
  // the M1 line meets the locus at q0: integrating across it must fail
  CHECK_THROWS_AS(integrate_branch(w.rear.reference, 0.19, w.q1, 101, d.src, d.gas), SingularityError);
}

}  // TEST_SUITE
