#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hornwave::io {

/// 17 significant digits, '.' separator, shortest exponent form (printf %.17g).
std::string format_real(double v);

/// Appends `values` as one comma-separated line terminated by '\n'.
void append_row(std::string& out, std::initializer_list<double> values);

struct Artifact {
  std::string name;
  std::string content;
};
using ArtifactSet = std::vector<Artifact>;

/// Writes every artifact to a temporary sibling first and renames them into
/// place only after all writes succeeded. Throws IoError; never leaves a
/// truncated target behind.
void commit(const std::filesystem::path& dir, const ArtifactSet& artifacts);

std::string read_file(const std::filesystem::path& path);

}  // namespace hornwave::io
