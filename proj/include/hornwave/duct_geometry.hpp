#pragma once

#include <cstddef>
#include <vector>

#include "hornwave/gas_model.hpp"

namespace hornwave {

enum class DuctVariant { Horn, Exponential };

/// Bore parameters. The horn uses k and D through the product k D^2 / (gamma K);
/// the exponential variant uses a0 and C.
struct DuctParams {
  double k = 0.01;
  double D = 0.0;
  double x0 = 2.0;   // abscissa of infinite radius, m
  double L = 1.0;    // instrument length, m
  double a0 = 3.6e-5;
  double C = 1.7;

  void validate(DuctVariant variant) const;

  /// The horn law constant a'/a^gamma = k D^2 / (gamma K).
  double horn_constant(const GasConstants& gas) const { return k * D * D / (gas.gamma * gas.K); }
};

struct DuctSample {
  double x;
  double a;
  double r;
};

struct DuctShape {
  DuctVariant variant = DuctVariant::Horn;
  std::vector<DuctSample> samples;
};

/// Closed-form solution of a'/a^gamma = k D^2/(gamma K) that blows up at x0.
double horn_area(double x, const DuctParams& params, const GasConstants& gas);

/// a0 exp(C x), the duct that makes the isothermal rest source x-independent.
double exp_area(double x, const DuctParams& params);

double bore_radius(double area);

/// n uniform samples on [0, L].
DuctShape sample_shape(const DuctParams& params, const GasConstants& gas, std::size_t n,
                       DuctVariant variant);

/// Max relative deviation of the central-difference a'/a^gamma (Horn) or a'/a
/// (Exponential) from its constant, over interior samples.
double validate_shape(const DuctShape& shape, const DuctParams& params, const GasConstants& gas);

const char* to_string(DuctVariant variant);

}  // namespace hornwave
