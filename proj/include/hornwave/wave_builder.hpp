#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hornwave/field_state.hpp"
#include "hornwave/gas_model.hpp"
#include "hornwave/numerics.hpp"

namespace hornwave {

struct PhasePoint {
  double q = 0.0;
  double m = 0.0;
  double u() const { return m / q; }
};

/// A reference point together with its phase-plane line m = A q - B,
/// A = u_ref + c0, B = q_ref c0.
struct ReferenceState {
  PhasePoint point;
  double A = 0.0;
  double B = 0.0;
  bool on_locus = false;

  double line(double q) const { return A * q - B; }
};

/// Reference on the zero-source locus: u_ref = D q_ref^(gamma/2).
ReferenceState reference_from_q(double q_ref, const SourceParams& src, const GasConstants& gas);

/// Reference at an arbitrary point (M1, M2 off the locus).
ReferenceState reference_from_point(const PhasePoint& point, const SourceParams& src,
                                    const GasConstants& gas);

/// dxi/dq along the line of `ref`:
///   (B^2 - c0^2 q^2) / (q^2 S(q, A q - B)).
/// At q = q_ref on a locus reference the 0/0 is replaced by psi_prime_limit().
/// Throws SingularityError where the denominator vanishes and the numerator does not.
double psi_prime(double q, const ReferenceState& ref, const SourceParams& src,
                 const GasConstants& gas);

/// L'Hopital value at q = q_ref for a locus reference:
///   -2 c0^2 q / (k (2 A |u| q - D^2 (gamma+2) q^(gamma+1))).
double psi_prime_limit(const ReferenceState& ref, const SourceParams& src, const GasConstants& gas);

/// The alternative closed form 2 q c0^2 / (k (2 A u q^2 - D^2 (gamma+2) q^(gamma+1)))
/// that circulates for this limit. Only used by the discrepancy report.
double psi_prime_limit_alternative(const ReferenceState& ref, const SourceParams& src,
                                   const GasConstants& gas);

/// Richardson-extrapolated limit of psi' through q_ref (1 +/- 10^-k), k = 4, 5.
double psi_prime_numerical_limit(const ReferenceState& ref, const SourceParams& src,
                                 const GasConstants& gas);

struct LimitReport {
  double lhopital = 0.0;
  double numerical = 0.0;
  double alternative = 0.0;
  double lhopital_rel_error = 0.0;
  double alternative_rel_error = 0.0;
};

LimitReport psi_prime_limit_report(const ReferenceState& ref, const SourceParams& src,
                                   const GasConstants& gas);

struct Q12Roots {
  double q1 = 0.0;
  double q2 = 0.0;
  double R = 0.0;  // q1 + q2
  bool degenerate = false;
};

/// Roots of q^2 - R q + q* q0 = 0 with R = (u* + 2 c0 - D q0^(gamma/2)) q0 / c0.
/// q1 is the larger root. q0 == q* gives the double root q*.
Q12Roots solve_q12(double q_star, double q0, const SourceParams& src, const GasConstants& gas);

struct BranchVelocities {
  double A1 = 0.0;
  double A_star = 0.0;
  double A2 = 0.0;
};

BranchVelocities branch_velocities(double q_star, double q1, double q2, double u_star, double c0);

enum class Monotone { Increasing, Decreasing };

struct WaveSample {
  double xi;
  double q;
  double m;
};

struct BranchOptions {
  double tolerance = 1e-10;      // relative quadrature tolerance on the branch extent
  std::size_t intervals = 2048;  // quadrature nodes used for the q(xi) inversion
};

/// One traveling-wave piece. Samples are uniform in xi on [0, extent].
struct WaveBranch {
  ReferenceState reference;
  double q_from = 0.0;
  double q_to = 0.0;
  double velocity = 0.0;
  Monotone monotone = Monotone::Increasing;
  double extent = 0.0;
  std::vector<WaveSample> samples;
  numerics::MonotoneCubic profile;  // q(xi)

  double q_at(double xi) const { return profile(xi); }
  double m_at(double xi) const { return reference.line(q_at(xi)); }
};

/// Integrates xi(q) = int psi' along the reference line from q_from to q_to.
/// An endpoint lying within 1e-6 of the span from a simple pole is integrated
/// in the variable ln|q - pole|.
WaveBranch integrate_branch(const ReferenceState& ref, double q_from, double q_to,
                            std::size_t n_samples, const SourceParams& src, const GasConstants& gas,
                            const BranchOptions& options = {});

struct WaveOptions {
  BranchOptions branch;
  // Rear and front branches approach M0 only asymptotically; they are cut at
  // q0 (1 +/- closure_tol).
  double closure_tol = 1e-10;
};

enum class BranchId { Rear = 0, Central = 1, Front = 2 };
const char* to_string(BranchId id);

struct CompositeWave {
  WaveBranch rear;     // M0 -> M1 on the M1 line
  WaveBranch central;  // M1 -> M* -> M2 on the M* line
  WaveBranch front;    // M2 -> M0 on the M2 line
  PhasePoint M0, M1, M2, M_star;
  double q0 = 0.0, q1 = 0.0, q2 = 0.0, q_star = 0.0;
  double u_star = 0.0;
  BranchVelocities velocities;
  double wavelength = 0.0;
  double frequency = 0.0;
  double closure_tol = 0.0;

  const WaveBranch& branch(BranchId id) const;
  /// xi offset of the start of each branch within a period.
  double offset(BranchId id) const;

  struct Value {
    double q;
    double m;
    BranchId branch;
  };
  /// Periodic evaluation of the profile.
  Value at(double xi) const;
};

CompositeWave assemble_wave(double q_star, double q0, std::size_t resolution,
                            const SourceParams& src, const GasConstants& gas,
                            const WaveOptions& options = {});

struct PdeResidual {
  double mass = 0.0;
  double momentum = 0.0;  // normalised by k D^2 q^gamma
};

/// Residuals of q_t + m_x = 0 and the momentum balance at one point of a branch.
PdeResidual residual_at(const WaveBranch& branch, double q, const SourceParams& src,
                        const GasConstants& gas);

/// Max residuals over n_probe interior probes of each branch.
PdeResidual pde_residual(const CompositeWave& wave, std::size_t n_probe, const SourceParams& src,
                         const GasConstants& gas);

struct RankineHugoniotReport {
  double rate_rh = 0.0;     // c0 / sqrt(q1 q2)
  double rate_m0 = 0.0;     // c0 / q0
  double rate_align = 0.0;  // c0 q* / (q1 q2)
  bool admissible = false;
};

RankineHugoniotReport rankine_hugoniot_check(double q_star, double q0, const SourceParams& src,
                                             const GasConstants& gas, double tol = 1e-10);

/// n_periods copies of the profile, point-sampled at cell centres.
FieldState wavetrain(const CompositeWave& wave, std::size_t n_periods, std::size_t cells_per_period);

}  // namespace hornwave
