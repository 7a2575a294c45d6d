#include "hornwave/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "hornwave/errors.hpp"

namespace hornwave::io {

std::string format_real(double v) {
  std::array<char, 64> buf{};
  const auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  if (ec != std::errc()) throw IoError("format_real: conversion failed");
  return std::string(buf.data(), p);
}

void append_row(std::string& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += format_real(v);
    first = false;
  }
  out += '\n';
}

void commit(const std::filesystem::path& dir, const ArtifactSet& artifacts) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

  std::vector<fs::path> temps;
  auto cleanup = [&] {
    for (const auto& t : temps) fs::remove(t, ec);
  };
  for (const auto& a : artifacts) {
    const fs::path tmp = dir / (a.name + ".tmp");
    temps.push_back(tmp);
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) {
      cleanup();
      throw IoError("cannot open '" + tmp.string() + "' for writing");
    }
    os.write(a.content.data(), static_cast<std::streamsize>(a.content.size()));
    os.close();
    if (!os) {
      cleanup();
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  // a rename onto a directory would fail halfway through the set
  for (const auto& a : artifacts) {
    if (fs::is_directory(dir / a.name, ec)) {
      cleanup();
      throw IoError("cannot replace directory '" + (dir / a.name).string() + "' with a file");
    }
  }
  for (std::size_t i = 0; i < artifacts.size(); ++i) {
    fs::rename(temps[i], dir / artifacts[i].name, ec);
    if (ec) {
      cleanup();
      throw IoError("cannot move '" + temps[i].string() + "' into place: " + ec.message());
    }
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace hornwave::io
