#pragma once

namespace hornwave {

/// Thermodynamic constants of the combined isothermal/isentropic model (M.K.S.).
///
/// The sound speed is fixed at c0 = sqrt(gamma K0 T0); the isentropic constant
/// K only enters through the duct shape law and the rest-state source.
struct GasConstants {
  double gamma = 1.4;
  double K0 = 287.06;   // Boyle-Mariotte constant, J/(kg K)
  double K = 69259.5;   // isentropic constant
  double T0 = 300.0;    // reference temperature, K
  double c0 = 0.0;      // derived

  /// Builds a validated set with c0 computed from T0.
  static GasConstants make(double T0 = 300.0, double gamma = 1.4, double K0 = 287.06,
                           double K = 69259.5);

  void validate() const;
};

/// Strickler friction k and source constant D; the zero-source locus is u = D q^(gamma/2).
struct SourceParams {
  double k = 0.01;
  double D = 0.0;

  void validate() const;
};

double sound_speed(double T0, const GasConstants& gas);

/// P(q) = c0^2 q for the constant-sound-speed law.
double pressure(double q, double c0);

/// k (|u| u - D^2 q^gamma) with u = m / q.
double source(double q, double m, const SourceParams& src, const GasConstants& gas);

/// m on the zero-source locus S0: m = D q^(gamma/2 + 1).
double s_zero_locus(double q, const SourceParams& src, const GasConstants& gas);

/// Source constant D that puts (q_star, u_star) on S0.
double source_constant_for(double q_star, double u_star, const GasConstants& gas);

}  // namespace hornwave
