#pragma once

#include <cstddef>
#include <vector>

namespace hornwave {

/// Cell-centred periodic field of line density q and line flux m.
struct FieldState {
  std::vector<double> x;
  std::vector<double> q;
  std::vector<double> m;
  double dx = 0.0;
  double t = 0.0;

  std::size_t size() const { return q.size(); }
  double domain_length() const { return dx * static_cast<double>(q.size()); }

  /// Throws DomainError unless the arrays agree in length (>= 8) and q > floor everywhere.
  void validate(double positivity_floor = 0.0) const;
};

/// Sum of q dx, accumulated serially so that the ledger is reproducible.
double total_mass(const FieldState& state);
double total_momentum(const FieldState& state);

}  // namespace hornwave
