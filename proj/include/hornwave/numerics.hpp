#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hornwave::numerics {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Adaptive composite Simpson with Richardson correction. Stops refining a panel
/// when |S2 - S1| <= 15 tol_abs (the tolerance is split between halves).
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol_abs, int max_depth = 50);

/// Monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson slopes).
/// Nodes must be strictly increasing; values may be monotone in either direction.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;
  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }
  bool empty() const { return x_.empty(); }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> d_;
};

}  // namespace hornwave::numerics
