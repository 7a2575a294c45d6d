#include "hornwave/fv_kernels.hpp"

#include <algorithm>

namespace hornwave::kernels {

namespace serial {

void interface_fluxes(std::span<const double> q, std::span<const double> m, double c0,
                      FluxKind kind, std::span<double> fq, std::span<double> fm) {
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = i + 1 == n ? 0 : i + 1;
    const auto f = numerical_flux(q[i], m[i], q[r], m[r], c0, kind);
    fq[i] = f.mass;
    fm[i] = f.momentum;
  }
}

void conservative_update(std::span<const double> q, std::span<const double> m,
                         std::span<const double> fq, std::span<const double> fm, double ratio,
                         std::span<double> q_out, std::span<double> m_out) {
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t l = i == 0 ? n - 1 : i - 1;
    q_out[i] = q[i] - ratio * (fq[i] - fq[l]);
    m_out[i] = m[i] - ratio * (fm[i] - fm[l]);
  }
}

void apply_source(std::span<const double> q, std::span<const double> m, double dt,
                  const SourceCoefficients& c, std::span<double> m_out) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    m_out[i] -= dt * friction_source(q[i], m[i], c.k, c.D, c.gamma);
  }
}

double max_wave_speed(std::span<const double> q, std::span<const double> m, double c0) {
  double s = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) s = std::max(s, std::abs(m[i] / q[i]));
  return s + c0;
}

std::size_t count_below(std::span<const double> q, double floor) {
  return static_cast<std::size_t>(std::count_if(q.begin(), q.end(), [floor](double v) { return !(v > floor); }));
}

void circular_correlation(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  const std::size_t n = a.size();
  for (std::size_t l = 0; l < n; ++l) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = i + l < n ? i + l : i + l - n;
      acc += a[i] * b[j];
    }
    out[l] = acc;
  }
}

}  // namespace serial

namespace omp {

void interface_fluxes(std::span<const double> q, std::span<const double> m, double c0,
                      FluxKind kind, std::span<double> fq, std::span<double> fm) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(q.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t r = i + 1 == n ? 0 : i + 1;
    const auto f = numerical_flux(q[i], m[i], q[r], m[r], c0, kind);
    fq[i] = f.mass;
    fm[i] = f.momentum;
  }
}

void conservative_update(std::span<const double> q, std::span<const double> m,
                         std::span<const double> fq, std::span<const double> fm, double ratio,
                         std::span<double> q_out, std::span<double> m_out) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(q.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t l = i == 0 ? n - 1 : i - 1;
    q_out[i] = q[i] - ratio * (fq[i] - fq[l]);
    m_out[i] = m[i] - ratio * (fm[i] - fm[l]);
  }
}

void apply_source(std::span<const double> q, std::span<const double> m, double dt,
                  const SourceCoefficients& c, std::span<double> m_out) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(q.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    m_out[i] -= dt * friction_source(q[i], m[i], c.k, c.D, c.gamma);
  }
}

double max_wave_speed(std::span<const double> q, std::span<const double> m, double c0) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(q.size());
  double s = 0.0;
#pragma omp parallel for reduction(max : s) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) s = std::max(s, std::abs(m[i] / q[i]));
  return s + c0;
}

std::size_t count_below(std::span<const double> q, double floor) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(q.size());
  std::size_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) count += !(q[i] > floor) ? 1 : 0;
  return count;
}

void circular_correlation(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t l = 0; l < n; ++l) {
    double acc = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const std::ptrdiff_t j = i + l < n ? i + l : i + l - n;
      acc += a[i] * b[j];
    }
    out[l] = acc;
  }
}

}  // namespace omp

}  // namespace hornwave::kernels
