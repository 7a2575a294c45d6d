#pragma once

// Data-parallel inner loops of the finite-volume solver.
//
// Every kernel exists twice with identical signatures: `serial::` is the
// reference used by tests, `omp::` distributes the same per-cell arithmetic
// over OpenMP threads. Per-cell results are bitwise identical between the two;
// only max-reductions are combined across threads, and max is exact.

#include <cmath>
#include <cstddef>
#include <span>

namespace hornwave::kernels {

enum class FluxKind { Rusanov, Hll };

struct FluxPair {
  double mass;
  double momentum;
};

inline FluxPair physical_flux(double q, double m, double c0) {
  return {m, m * m / q + c0 * c0 * q};
}

inline FluxPair numerical_flux(double qL, double mL, double qR, double mR, double c0, FluxKind kind) {
  const auto FL = physical_flux(qL, mL, c0);
  const auto FR = physical_flux(qR, mR, c0);
  const double uL = mL / qL;
  const double uR = mR / qR;
  if (kind == FluxKind::Rusanov) {
    const double a = std::fmax(std::abs(uL), std::abs(uR)) + c0;
    return {0.5 * (FL.mass + FR.mass) - 0.5 * a * (qR - qL),
            0.5 * (FL.momentum + FR.momentum) - 0.5 * a * (mR - mL)};
  }
  const double sL = std::fmin(uL - c0, uR - c0);
  const double sR = std::fmax(uL + c0, uR + c0);
  if (sL >= 0.0) return FL;
  if (sR <= 0.0) return FR;
  const double inv = 1.0 / (sR - sL);
  return {(sR * FL.mass - sL * FR.mass + sL * sR * (qR - qL)) * inv,
          (sR * FL.momentum - sL * FR.momentum + sL * sR * (mR - mL)) * inv};
}

/// k (|u| u - D^2 q^gamma)
inline double friction_source(double q, double m, double k, double D, double gamma) {
  const double u = m / q;
  return k * (std::abs(u) * u - D * D * std::pow(q, gamma));
}

struct SourceCoefficients {
  double k;
  double D;
  double gamma;
};

#define HORNWAVE_KERNEL_DECLS                                                                   \
  /* fq[i], fm[i]: flux through the face between cell i and i+1 (periodic) */                  \
  void interface_fluxes(std::span<const double> q, std::span<const double> m, double c0,       \
                        FluxKind kind, std::span<double> fq, std::span<double> fm);             \
  /* out = in - ratio (f[i] - f[i-1]) */                                                        \
  void conservative_update(std::span<const double> q, std::span<const double> m,                \
                           std::span<const double> fq, std::span<const double> fm, double ratio, \
                           std::span<double> q_out, std::span<double> m_out);                   \
  /* m_out[i] -= dt S(q[i], m[i]) */                                                            \
  void apply_source(std::span<const double> q, std::span<const double> m, double dt,            \
                    const SourceCoefficients& coeffs, std::span<double> m_out);                 \
  double max_wave_speed(std::span<const double> q, std::span<const double> m, double c0);       \
  std::size_t count_below(std::span<const double> q, double floor);                             \
  /* out[l] = sum_i a[i] b[(i + l) mod n] */                                                    \
  void circular_correlation(std::span<const double> a, std::span<const double> b,               \
                            std::span<double> out);

namespace serial {
HORNWAVE_KERNEL_DECLS
}  // namespace serial

namespace omp {
HORNWAVE_KERNEL_DECLS
}  // namespace omp

#undef HORNWAVE_KERNEL_DECLS

}  // namespace hornwave::kernels
