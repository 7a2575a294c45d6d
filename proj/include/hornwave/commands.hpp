#pragma once

#include <exception>
#include <ostream>
#include <string_view>

#include "hornwave/config.hpp"
#include "hornwave/io.hpp"

namespace hornwave {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

/// Builds a command's output files in memory. `status` receives the command's
/// own verdict (validate reports failures through it).
io::ArtifactSet shape_artifacts(const RunConfig& config);
io::ArtifactSet roots_artifacts(const RunConfig& config);
io::ArtifactSet profile_artifacts(const RunConfig& config);
io::ArtifactSet simulate_artifacts(const RunConfig& config);
io::ArtifactSet validate_artifacts(const RunConfig& config, int& status);

/// Runs `command` and commits its artifacts under config.output_dir.
/// Errors are reported on `err` and mapped to exit codes.
int run_command(std::string_view command, const RunConfig& config, std::ostream& err);

int exit_code_for(const std::exception& e);

}  // namespace hornwave
