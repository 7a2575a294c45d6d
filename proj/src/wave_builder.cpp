#include "hornwave/wave_builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "hornwave/errors.hpp"

namespace hornwave {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// |q - q_ref| below this fraction of q_ref uses the L'Hopital value
constexpr double kRemovableWindow = 1e-8;
// a probe closer than this fraction of the branch span to an endpoint is rejected
constexpr double kProbeClamp = 1e-9;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// psi' numerator (B - c0 q)(B + c0 q) and denominator q^2 S(q, A q - B).
struct PsiParts {
  double num;
  double den;
  double scale;  // magnitude of the terms cancelling inside den
};

PsiParts psi_parts(double q, const ReferenceState& ref, const SourceParams& src,
                   const GasConstants& gas) {
  const double c0 = gas.c0;
  const double w = ref.line(q);
  const double friction = std::abs(w) * w;
  const double rest = src.D * src.D * std::pow(q, gas.gamma + 2.0);
  return {(ref.B - c0 * q) * (ref.B + c0 * q), src.k * (friction - rest),
          src.k * (std::abs(friction) + rest)};
}

double den_derivative(double q, const ReferenceState& ref, const SourceParams& src,
                      const GasConstants& gas) {
  const double w = ref.line(q);
  return src.k * (2.0 * std::abs(w) * ref.A -
                  src.D * src.D * (gas.gamma + 2.0) * std::pow(q, gas.gamma + 1.0));
}

bool is_removable(double q, const ReferenceState& ref) {
  return ref.on_locus && std::abs(q - ref.point.q) <= kRemovableWindow * ref.point.q;
}

double psi_prime_raw(double q, const ReferenceState& ref, const SourceParams& src,
                     const GasConstants& gas) {
  const auto p = psi_parts(q, ref, src, gas);
  return p.num / p.den;
}

bool den_vanishes(const PsiParts& p) { return std::abs(p.den) <= 8.0 * kEps * p.scale; }

// Monotone map of a parameter tau onto [q_from, q_to] with its jacobian dq/dtau.
struct BranchMap {
  enum class Kind { Linear, LogAtFrom, LogAtTo } kind = Kind::Linear;
  double q_from = 0.0;
  double q_to = 0.0;
  double pole = 0.0;
  double tau_a = 0.0;
  double tau_b = 1.0;

  double q(double tau) const {
    switch (kind) {
      case Kind::Linear:
        return q_from + tau * (q_to - q_from);
      case Kind::LogAtFrom:
        return pole + (q_to - pole) * std::exp(tau);
      case Kind::LogAtTo:
        return pole + (q_from - pole) * std::exp(-tau);
    }
    return 0.0;
  }

  double jacobian(double tau, double qv) const {
    (void)tau;
    switch (kind) {
      case Kind::Linear:
        return q_to - q_from;
      case Kind::LogAtFrom:
        return qv - pole;
      case Kind::LogAtTo:
        return -(qv - pole);
    }
    return 0.0;
  }
};

// Newton estimate of a simple pole next to endpoint e. Returns NaN if e is not near one.
double pole_near(double e, double q_from, double q_to, const ReferenceState& ref,
                 const SourceParams& src, const GasConstants& gas) {
  const auto p = psi_parts(e, ref, src, gas);
  const double span = std::abs(q_to - q_from);
  if (std::abs(p.num) <= 1e-6 * gas.c0 * gas.c0 * e * e) return std::nan("");
  const double dd = den_derivative(e, ref, src, gas);
  if (dd == 0.0) return std::nan("");
  const double pole = e - p.den / dd;
  const bool inside = (pole - q_from) * (pole - q_to) < 0.0;
  if (inside || std::abs(e - pole) > 1e-6 * span || pole == e) return std::nan("");
  return pole;
}

// Denominator of psi' expressed as an offset from an anchor a:
//   den(a + d) = den(a) + k [ |w|w(a + d) - |w|w(a) - D^2 a^(gamma+2) expm1((gamma+2) log1p(d/a)) ]
// Near a simple pole den is a small difference of O(1) terms; the offset form
// keeps it smooth in d so the quadrature does not chase rounding noise.
class AnchoredDenominator {
 public:
  AnchoredDenominator(double anchor, const ReferenceState& ref, const SourceParams& src, const GasConstants& gas,
                      bool anchor_on_locus = false)
      : a_(anchor), ref_(ref), src_(src), gas_(gas) {
    den_a_ = anchor_on_locus ? 0.0 : psi_parts(anchor, ref, src, gas).den;
    w_a_ = ref.line(anchor);
    pow_a_ = std::pow(anchor, gas.gamma + 2.0);
  }

  double at_offset(double d) const {
    const double w = ref_.line(a_ + d);
    double friction_diff;
    if ((w > 0.0) == (w_a_ > 0.0)) {
      const double sgn = w_a_ > 0.0 ? 1.0 : -1.0;
      friction_diff = sgn * (ref_.A * d) * (w + w_a_);
    } else {
      friction_diff = std::abs(w) * w - std::abs(w_a_) * w_a_;
    }
    const double rest_diff = src_.D * src_.D * pow_a_ * std::expm1((gas_.gamma + 2.0) * std::log1p(d / a_));
    return den_a_ + src_.k * (friction_diff - rest_diff);
  }

  double value_at_anchor() const { return den_a_; }

 private:
  double a_;
  const ReferenceState& ref_;
  const SourceParams& src_;
  const GasConstants& gas_;
  double den_a_ = 0.0;
  double w_a_ = 0.0;
  double pow_a_ = 0.0;
};

}  // namespace

ReferenceState reference_from_q(double q_ref, const SourceParams& src, const GasConstants& gas) {
  if (!(q_ref > 0.0)) throw DomainError("reference_from_q: q_ref must be positive, got " + fmt(q_ref));
  ReferenceState ref;
  ref.point = {q_ref, s_zero_locus(q_ref, src, gas)};
  ref.A = src.D * std::pow(q_ref, 0.5 * gas.gamma) + gas.c0;
  ref.B = q_ref * gas.c0;
  ref.on_locus = true;
  return ref;
}

ReferenceState reference_from_point(const PhasePoint& point, const SourceParams& src,
                                    const GasConstants& gas) {
  if (!(point.q > 0.0)) throw DomainError("reference_from_point: q must be positive");
  ReferenceState ref;
  ref.point = point;
  ref.A = point.u() + gas.c0;
  ref.B = point.q * gas.c0;
  const double s = source(point.q, point.m, src, gas);
  ref.on_locus = std::abs(s) <= 1e-12 * src.k * src.D * src.D * std::pow(point.q, gas.gamma);
  return ref;
}

double psi_prime_limit(const ReferenceState& ref, const SourceParams& src, const GasConstants& gas) {
  const double q = ref.point.q;
  const double dd = den_derivative(q, ref, src, gas);
  if (dd == 0.0) throw SingularityError("psi_prime_limit: degenerate denominator derivative", q);
  return -2.0 * gas.c0 * gas.c0 * q / dd;
}

double psi_prime_limit_alternative(const ReferenceState& ref, const SourceParams& src,
                                   const GasConstants& gas) {
  const double q = ref.point.q;
  const double u = ref.point.u();
  return 2.0 * q * gas.c0 * gas.c0 /
         (src.k * (2.0 * ref.A * u * q * q -
                   src.D * src.D * (gas.gamma + 2.0) * std::pow(q, gas.gamma + 1.0)));
}

double psi_prime_numerical_limit(const ReferenceState& ref, const SourceParams& src,
                                 const GasConstants& gas) {
  const double q = ref.point.q;
  auto symmetric = [&](double h) {
    return 0.5 * (psi_prime_raw(q * (1.0 + h), ref, src, gas) +
                  psi_prime_raw(q * (1.0 - h), ref, src, gas));
  };
  return (100.0 * symmetric(1e-5) - symmetric(1e-4)) / 99.0;
}

LimitReport psi_prime_limit_report(const ReferenceState& ref, const SourceParams& src,
                                   const GasConstants& gas) {
  LimitReport r;
  r.lhopital = psi_prime_limit(ref, src, gas);
  r.numerical = psi_prime_numerical_limit(ref, src, gas);
  r.alternative = psi_prime_limit_alternative(ref, src, gas);
  r.lhopital_rel_error = std::abs(r.lhopital - r.numerical) / std::abs(r.numerical);
  r.alternative_rel_error = std::abs(r.alternative - r.numerical) / std::abs(r.numerical);
  return r;
}

double psi_prime(double q, const ReferenceState& ref, const SourceParams& src,
                 const GasConstants& gas) {
  if (!(q > 0.0)) throw DomainError("psi_prime: q must be positive, got " + fmt(q));
  const auto p = psi_parts(q, ref, src, gas);
  if (ref.on_locus) {
    // both factors vanish at q_ref; divide them out in offset form
    const double d = q - ref.point.q;
    if (d == 0.0) return psi_prime_limit(ref, src, gas);
    const AnchoredDenominator den(ref.point.q, ref, src, gas, true);
    const double dv = den.at_offset(d);
    if (std::abs(dv) <= 8.0 * kEps * p.scale && !is_removable(q, ref)) {
      throw SingularityError("psi_prime: pole at q = " + fmt(q) + " (source vanishes on the line)", q);
    }
    return -gas.c0 * d * (ref.B + gas.c0 * q) / dv;
  }
  if (den_vanishes(p)) {
    throw SingularityError("psi_prime: pole at q = " + fmt(q) + " (source vanishes on the line)", q);
  }
  return p.num / p.den;
}

Q12Roots solve_q12(double q_star, double q0, const SourceParams& src, const GasConstants& gas) {
  if (!(q_star > 0.0)) throw DomainError("solve_q12: q_star must be positive");
  if (q0 < q_star) {
    throw ParameterRegimeError("solve_q12: q0 = " + fmt(q0) + " must not be below q_star = " + fmt(q_star));
  }
  const double c0 = gas.c0;
  const double g2 = 0.5 * gas.gamma;
  const double u_star = src.D * std::pow(q_star, g2);
  Q12Roots r;
  r.R = (u_star + 2.0 * c0 - src.D * std::pow(q0, g2)) * q0 / c0;
  const double product = q_star * q0;
  double disc = r.R * r.R - 4.0 * product;
  if (q0 == q_star) {
    r.q1 = r.q2 = q_star;
    r.degenerate = true;
    return r;
  }
  if (disc < 0.0) {
    if (disc >= -64.0 * kEps * r.R * r.R) {
      disc = 0.0;
    } else {
      throw ParameterRegimeError("solve_q12: negative discriminant " + fmt(disc) +
                                 ", no traveling wave for these parameters");
    }
  }
  r.q1 = 0.5 * (r.R + std::sqrt(disc));
  r.q2 = product / r.q1;  // Vieta, avoids cancellation in the smaller root
  if (disc == 0.0) {
    r.degenerate = true;
    return r;
  }
  if (!(r.q2 < q_star && q_star < q0 && q0 < r.q1)) {
    throw ParameterRegimeError("solve_q12: ordering q2 < q* < q0 < q1 violated (q1 = " + fmt(r.q1) +
                               ", q2 = " + fmt(r.q2) + ")");
  }
  return r;
}

BranchVelocities branch_velocities(double q_star, double q1, double q2, double u_star, double c0) {
  if (!(q2 <= q_star && q_star <= q1) || !(q2 > 0.0)) {
    throw ParameterRegimeError("branch_velocities: ordering q2 <= q* <= q1 violated");
  }
  BranchVelocities v;
  v.A_star = u_star + c0;
  v.A1 = u_star + 2.0 * c0 - c0 * q_star / q1;
  v.A2 = u_star + 2.0 * c0 - c0 * q_star / q2;
  return v;
}

WaveBranch integrate_branch(const ReferenceState& ref, double q_from, double q_to,
                            std::size_t n_samples, const SourceParams& src, const GasConstants& gas,
                            const BranchOptions& options) {
  if (!(q_from > 0.0) || !(q_to > 0.0)) throw DomainError("integrate_branch: q must be positive");
  if (q_from == q_to) throw DomainError("integrate_branch: empty branch");
  if (n_samples < 8) throw DomainError("integrate_branch: need at least 8 samples");
  if (options.intervals < 8) throw DomainError("integrate_branch: need at least 8 quadrature intervals");

  for (double e : {q_from, q_to}) {
    if (is_removable(e, ref)) continue;
    if (den_vanishes(psi_parts(e, ref, src, gas))) {
      throw SingularityError("integrate_branch: pole at endpoint q = " + fmt(e), e);
    }
  }

  // Scan the interior: psi' must keep one sign, and the denominator must not
  // cross zero except together with the numerator (removable point).
  constexpr int kScan = 512;
  int sign = 0;
  double prev_q = q_from;
  PsiParts prev = psi_parts(q_from, ref, src, gas);
  for (int j = 1; j <= kScan; ++j) {
    const double q = j == kScan ? q_to : q_from + (q_to - q_from) * j / kScan;
    const auto cur = psi_parts(q, ref, src, gas);
    const bool den_flip = (cur.den > 0.0) != (prev.den > 0.0);
    const bool num_flip = (cur.num > 0.0) != (prev.num > 0.0);
    const bool touches_removable = is_removable(prev_q, ref) || is_removable(q, ref);
    if (den_flip && !num_flip && !touches_removable) {
      throw SingularityError("integrate_branch: pole between q = " + fmt(prev_q) + " and " + fmt(q),
                             0.5 * (prev_q + q));
    }
    const double v = is_removable(q, ref) ? psi_prime_limit(ref, src, gas) : cur.num / cur.den;
    const int s = j == kScan ? 0 : (v > 0.0 ? 1 : (v < 0.0 ? -1 : 0));
    if (s != 0) {
      if (sign != 0 && s != sign) {
        throw InvalidBranchError("integrate_branch: psi' changes sign inside the branch near q = " + fmt(q));
      }
      sign = s;
    }
    prev = cur;
    prev_q = q;
  }
  if (sign == 0) throw InvalidBranchError("integrate_branch: psi' vanishes identically");

  BranchMap map;
  map.q_from = q_from;
  map.q_to = q_to;
  const double pole_from = pole_near(q_from, q_from, q_to, ref, src, gas);
  const double pole_to = pole_near(q_to, q_from, q_to, ref, src, gas);
  if (!std::isnan(pole_from) &&
      (std::isnan(pole_to) || std::abs(q_from - pole_from) <= std::abs(q_to - pole_to))) {
    map.kind = BranchMap::Kind::LogAtFrom;
    map.pole = pole_from;
    map.tau_a = std::log((q_from - pole_from) / (q_to - pole_from));
    map.tau_b = 0.0;
  } else if (!std::isnan(pole_to)) {
    map.kind = BranchMap::Kind::LogAtTo;
    map.pole = pole_to;
    map.tau_a = 0.0;
    map.tau_b = -std::log((q_to - pole_to) / (q_from - pole_to));
  }

  const std::size_t n = options.intervals;
  std::vector<double> tau(n + 1);
  std::vector<double> qn(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double c = 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(n)));
    tau[i] = map.tau_a + (map.tau_b - map.tau_a) * c;
    qn[i] = map.q(tau[i]);
  }
  tau.front() = map.tau_a;
  tau.back() = map.tau_b;
  qn.front() = q_from;
  qn.back() = q_to;

  // near-pole ends: offset-form denominator anchored at that endpoint
  std::optional<AnchoredDenominator> anchored;
  double anchor = 0.0;
  if (map.kind != BranchMap::Kind::Linear) {
    anchor = map.kind == BranchMap::Kind::LogAtFrom ? q_from : q_to;
    anchored.emplace(anchor, ref, src, gas);
  }
  const double c0 = gas.c0;
  auto integrand = [&](double t) {
    const double qv = map.q(t);
    if (!anchored) return psi_prime(qv, ref, src, gas) * map.jacobian(t, qv);
    // q - pole is carried exactly by the map; derive q - anchor from it
    const double from_pole = map.jacobian(t, qv) * (map.kind == BranchMap::Kind::LogAtFrom ? 1.0 : -1.0);
    const double d = from_pole - (anchor - map.pole);
    const double num = (ref.B - c0 * qv) * (ref.B + c0 * qv);
    const double den = anchored->at_offset(d);
    const double g = num / den * from_pole;
    return map.kind == BranchMap::Kind::LogAtFrom ? g : -g;
  };

  // coarse pass fixes the absolute tolerance, adaptive pass refines each interval
  double coarse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = tau[i];
    const double b = tau[i + 1];
    coarse += (b - a) / 6.0 * (integrand(a) + 4.0 * integrand(0.5 * (a + b)) + integrand(b));
  }
  const double tol_abs = options.tolerance * std::abs(coarse) / static_cast<double>(n);
  std::vector<double> xi(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    xi[i + 1] = xi[i] + numerics::adaptive_simpson(integrand, tau[i], tau[i + 1], tol_abs).value;
  }

  const double total = xi.back();
  if (total < 0.0) {
    for (auto& v : xi) v -= total;
    std::reverse(xi.begin(), xi.end());
    std::reverse(qn.begin(), qn.end());
  }
  std::vector<double> xs;
  std::vector<double> qs;
  xs.reserve(xi.size());
  qs.reserve(qn.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (!xs.empty() && !(xi[i] > xs.back())) continue;
    xs.push_back(xi[i]);
    qs.push_back(qn[i]);
  }
  if (xs.size() < 2) throw InvalidBranchError("integrate_branch: branch has zero extent");

  WaveBranch branch;
  branch.reference = ref;
  branch.q_from = q_from;
  branch.q_to = q_to;
  branch.velocity = ref.A;
  branch.monotone = sign > 0 ? Monotone::Increasing : Monotone::Decreasing;
  branch.extent = xs.back();
  branch.profile = numerics::MonotoneCubic(std::move(xs), std::move(qs));
  branch.samples.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = branch.extent * static_cast<double>(i) / static_cast<double>(n_samples - 1);
    const double q = branch.q_at(x);
    branch.samples.push_back({x, q, ref.line(q)});
  }
  return branch;
}

const char* to_string(BranchId id) {
  switch (id) {
    case BranchId::Rear:
      return "rear";
    case BranchId::Central:
      return "central";
    case BranchId::Front:
      return "front";
  }
  return "?";
}

const WaveBranch& CompositeWave::branch(BranchId id) const {
  switch (id) {
    case BranchId::Rear:
      return rear;
    case BranchId::Central:
      return central;
    case BranchId::Front:
      return front;
  }
  return rear;
}

double CompositeWave::offset(BranchId id) const {
  switch (id) {
    case BranchId::Rear:
      return 0.0;
    case BranchId::Central:
      return rear.extent;
    case BranchId::Front:
      return rear.extent + central.extent;
  }
  return 0.0;
}

CompositeWave::Value CompositeWave::at(double xi) const {
  double w = std::fmod(xi, wavelength);
  if (w < 0.0) w += wavelength;
  BranchId id = BranchId::Front;
  if (w < offset(BranchId::Central)) {
    id = BranchId::Rear;
  } else if (w < offset(BranchId::Front)) {
    id = BranchId::Central;
  }
  const auto& b = branch(id);
  const double q = b.q_at(w - offset(id));
  return {q, b.reference.line(q), id};
}

CompositeWave assemble_wave(double q_star, double q0, std::size_t resolution,
                            const SourceParams& src, const GasConstants& gas,
                            const WaveOptions& options) {
  const auto roots = solve_q12(q_star, q0, src, gas);
  if (roots.degenerate) {
    throw DomainError("assemble_wave: q0 = q* collapses the wave to a single point");
  }
  if (!(options.closure_tol > 0.0) || options.closure_tol >= 1e-2) {
    throw DomainError("assemble_wave: closure_tol must lie in (0, 1e-2)");
  }
  const double c0 = gas.c0;
  CompositeWave w;
  w.q_star = q_star;
  w.q0 = q0;
  w.q1 = roots.q1;
  w.q2 = roots.q2;
  w.closure_tol = options.closure_tol;

  const auto ref_star = reference_from_q(q_star, src, gas);
  w.u_star = ref_star.point.u();
  w.M_star = ref_star.point;
  w.M1 = {w.q1, ref_star.line(w.q1)};
  w.M2 = {w.q2, ref_star.line(w.q2)};
  const auto ref1 = reference_from_point(w.M1, src, gas);
  const auto ref2 = reference_from_point(w.M2, src, gas);

  const double m0_rear = ref1.line(q0);
  const double m0_front = ref2.line(q0);
  if (std::abs(m0_rear - m0_front) > 1e-10 * std::abs(m0_rear)) {
    throw InternalConsistencyError("assemble_wave: the M1 and M2 lines miss each other at q0 (" +
                                   fmt(m0_rear) + " vs " + fmt(m0_front) + ")");
  }
  w.M0 = {q0, m0_rear};

  const double eta = options.closure_tol;
  w.rear = integrate_branch(ref1, q0 * (1.0 + eta), w.q1, resolution, src, gas, options.branch);
  w.central = integrate_branch(ref_star, w.q1, w.q2, resolution, src, gas, options.branch);
  w.front = integrate_branch(ref2, w.q2, q0 * (1.0 - eta), resolution, src, gas, options.branch);
  if (w.rear.monotone != Monotone::Increasing || w.central.monotone != Monotone::Decreasing ||
      w.front.monotone != Monotone::Increasing) {
    throw InvalidBranchError("assemble_wave: branch monotonicity differs from rise/fall/rise");
  }

  w.velocities = branch_velocities(q_star, w.q1, w.q2, w.u_star, c0);
  w.wavelength = w.rear.extent + w.central.extent + w.front.extent;
  w.frequency = w.velocities.A_star / w.wavelength;
  return w;
}

PdeResidual residual_at(const WaveBranch& branch, double q, const SourceParams& src,
                        const GasConstants& gas) {
  const double lo = std::min(branch.q_from, branch.q_to);
  const double hi = std::max(branch.q_from, branch.q_to);
  const double margin = kProbeClamp * (hi - lo);
  if (!(q > lo + margin && q < hi - margin)) {
    throw ProbePlacementError("residual_at: probe q = " + fmt(q) + " is not strictly inside [" + fmt(lo) +
                              ", " + fmt(hi) + "]");
  }
  const double dpsi = psi_prime(q, branch.reference, src, gas);
  if (dpsi == 0.0) throw ProbePlacementError("residual_at: psi' = 0 at q = " + fmt(q));

  const double A = branch.velocity;
  const double m = branch.reference.line(q);
  const double u = m / q;
  const double c0 = gas.c0;
  const double q_x = 1.0 / dpsi;
  const double q_t = -A * q_x;
  const double m_x = A * q_x;
  const double m_t = -A * m_x;

  PdeResidual r;
  r.mass = q_t + m_x;
  const double momentum = m_t + 2.0 * u * m_x + (c0 * c0 - u * u) * q_x + source(q, m, src, gas);
  r.momentum = momentum / (src.k * src.D * src.D * std::pow(q, gas.gamma));
  return r;
}

PdeResidual pde_residual(const CompositeWave& wave, std::size_t n_probe, const SourceParams& src,
                         const GasConstants& gas) {
  if (n_probe == 0) throw DomainError("pde_residual: need at least one probe");
  PdeResidual worst;
  for (const WaveBranch* b : {&wave.rear, &wave.central, &wave.front}) {
    for (std::size_t j = 1; j <= n_probe; ++j) {
      const double q = b->q_from + (b->q_to - b->q_from) * static_cast<double>(j) /
                                       static_cast<double>(n_probe + 1);
      const auto r = residual_at(*b, q, src, gas);
      worst.mass = std::max(worst.mass, std::abs(r.mass));
      worst.momentum = std::max(worst.momentum, std::abs(r.momentum));
    }
  }
  return worst;
}

RankineHugoniotReport rankine_hugoniot_check(double q_star, double q0, const SourceParams& src,
                                             const GasConstants& gas, double tol) {
  const auto roots = solve_q12(q_star, q0, src, gas);
  const double c0 = gas.c0;
  const double prod = roots.q1 * roots.q2;
  RankineHugoniotReport r;
  r.rate_rh = c0 / std::sqrt(prod);
  r.rate_m0 = c0 / q0;
  r.rate_align = c0 * q_star / prod;
  auto close = [tol](double a, double b) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); };
  r.admissible = close(r.rate_rh, r.rate_m0) && close(r.rate_rh, r.rate_align) && close(r.rate_m0, r.rate_align);
  return r;
}

FieldState wavetrain(const CompositeWave& wave, std::size_t n_periods, std::size_t cells_per_period) {
  if (n_periods < 1) throw DomainError("wavetrain: need at least one period");
  if (cells_per_period < 8) throw DomainError("wavetrain: need at least 8 cells per period");
  const std::size_t n = n_periods * cells_per_period;
  FieldState state;
  state.dx = wave.wavelength / static_cast<double>(cells_per_period);
  state.x.resize(n);
  state.q.resize(n);
  state.m.resize(n);
  for (std::size_t i = 0; i < cells_per_period; ++i) {
    const auto v = wave.at((static_cast<double>(i) + 0.5) * state.dx);
    for (std::size_t p = 0; p < n_periods; ++p) {
      state.q[p * cells_per_period + i] = v.q;
      state.m[p * cells_per_period + i] = v.m;
    }
  }
  for (std::size_t i = 0; i < n; ++i) state.x[i] = (static_cast<double>(i) + 0.5) * state.dx;
  return state;
}

}  // namespace hornwave
