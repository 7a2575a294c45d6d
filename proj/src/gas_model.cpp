#include "hornwave/gas_model.hpp"

#include <cmath>
#include <string>

#include "hornwave/errors.hpp"

namespace hornwave {

GasConstants GasConstants::make(double T0, double gamma, double K0, double K) {
  GasConstants gas;
  gas.gamma = gamma;
  gas.K0 = K0;
  gas.K = K;
  gas.T0 = T0;
  gas.c0 = sound_speed(T0, gas);
  gas.validate();
  return gas;
}

void GasConstants::validate() const {
  if (!(gamma > 1.0)) throw DomainError("gamma must exceed 1, got " + std::to_string(gamma));
  if (!(K0 > 0.0)) throw DomainError("K0 must be positive");
  if (!(K > 0.0)) throw DomainError("K must be positive");
  if (!(T0 > 0.0)) throw DomainError("T0 must be positive");
  if (!(c0 > 0.0)) throw DomainError("c0 must be positive");
}

void SourceParams::validate() const {
  if (!(k > 0.0)) throw DomainError("friction coefficient k must be positive");
  if (!(D > 0.0)) throw DomainError("source constant D must be positive");
}

double sound_speed(double T0, const GasConstants& gas) {
  if (!(T0 > 0.0)) throw DomainError("sound_speed: temperature must be positive, got " + std::to_string(T0));
  return std::sqrt(gas.gamma * gas.K0 * T0);
}

double pressure(double q, double c0) {
  if (!(q > 0.0)) throw DomainError("pressure: q must be positive");
  return c0 * c0 * q;
}

double source(double q, double m, const SourceParams& src, const GasConstants& gas) {
  if (!(q > 0.0)) throw DomainError("source: q must be positive, got " + std::to_string(q));
  const double u = m / q;
  return src.k * (std::abs(u) * u - src.D * src.D * std::pow(q, gas.gamma));
}

double s_zero_locus(double q, const SourceParams& src, const GasConstants& gas) {
  if (!(q > 0.0)) throw DomainError("s_zero_locus: q must be positive");
  return src.D * std::pow(q, 0.5 * gas.gamma + 1.0);
}

double source_constant_for(double q_star, double u_star, const GasConstants& gas) {
  if (!(q_star > 0.0)) throw DomainError("q_star must be positive");
  if (!(u_star > 0.0)) throw DomainError("u_star must be positive");
  return u_star / std::pow(q_star, 0.5 * gas.gamma);
}

}  // namespace hornwave
