#pragma once

#include <string>
#include <vector>

#include "hornwave/config.hpp"

namespace hornwave {

struct ValidationCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct ValidationNote {
  std::string name;
  double value = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::vector<ValidationNote> notes;  // reported, not gating

  bool all_pass() const;
};

/// Runs every module invariant against `config` (deterministic for a fixed seed).
ValidationReport run_validation(const RunConfig& config);

std::string to_json(const ValidationReport& report);

}  // namespace hornwave
