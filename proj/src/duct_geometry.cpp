#include "hornwave/duct_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hornwave/errors.hpp"

namespace hornwave {

void DuctParams::validate(DuctVariant variant) const {
  if (!(L > 0.0)) throw DomainError("duct length L must be positive");
  if (variant == DuctVariant::Horn) {
    if (!(k > 0.0) || !(D > 0.0)) throw DomainError("horn requires k > 0 and D > 0");
    if (!(x0 > L)) throw DomainError("x0 must exceed the instrument length L");
  } else {
    if (!(a0 > 0.0)) throw DomainError("exponential duct requires a0 > 0");
    if (!(C > 0.0)) throw DomainError("exponential duct requires C > 0");
  }
}

double horn_area(double x, const DuctParams& params, const GasConstants& gas) {
  if (x < 0.0) throw DomainError("horn_area: x must be non-negative");
  if (!(x < params.x0)) {
    throw DomainError("horn_area: x = " + std::to_string(x) + " is at or beyond x0 = " +
                      std::to_string(params.x0));
  }
  const double g = gas.gamma;
  const double base = g * gas.K / ((g - 1.0) * params.k * params.D * params.D * (params.x0 - x));
  return std::pow(base, 1.0 / (g - 1.0));
}

double exp_area(double x, const DuctParams& params) {
  if (x < 0.0) throw DomainError("exp_area: x must be non-negative");
  return params.a0 * std::exp(params.C * x);
}

double bore_radius(double area) { return std::sqrt(area / std::numbers::pi); }

DuctShape sample_shape(const DuctParams& params, const GasConstants& gas, std::size_t n,
                       DuctVariant variant) {
  if (n < 2) throw DomainError("sample_shape: need at least 2 samples");
  params.validate(variant);
  DuctShape shape;
  shape.variant = variant;
  shape.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // last sample pinned to L exactly
    const double x = (i + 1 == n) ? params.L : params.L * static_cast<double>(i) / static_cast<double>(n - 1);
    const double a = variant == DuctVariant::Horn ? horn_area(x, params, gas) : exp_area(x, params);
    shape.samples.push_back({x, a, bore_radius(a)});
  }
  return shape;
}

double validate_shape(const DuctShape& shape, const DuctParams& params, const GasConstants& gas) {
  const auto& s = shape.samples;
  if (s.size() < 3) throw DomainError("validate_shape: need at least 3 samples");
  const bool horn = shape.variant == DuctVariant::Horn;
  const double target = horn ? params.horn_constant(gas) : params.C;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double da = (s[i + 1].a - s[i - 1].a) / (s[i + 1].x - s[i - 1].x);
    const double law = horn ? da / std::pow(s[i].a, gas.gamma) : da / s[i].a;
    worst = std::max(worst, std::abs(law - target) / std::abs(target));
  }
  return worst;
}

const char* to_string(DuctVariant variant) {
  return variant == DuctVariant::Horn ? "horn" : "exponential";
}

}  // namespace hornwave
