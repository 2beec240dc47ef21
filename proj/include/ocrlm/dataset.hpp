#pragma once

// Rendered datasets on disk: 8-bit PGM images plus a UTF-8 manifest with one
// `relative/path.pgm<TAB>transcript` record per line. Normalization happens
// at load time.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ocrlm/glyphrender.hpp"

namespace ocrlm::data {

struct ManifestEntry {
  std::string path;  // relative to the manifest's directory
  std::string transcript;
  bool operator==(const ManifestEntry&) const = default;
};

void write_manifest(std::ostream& os, const std::vector<ManifestEntry>& entries);
std::vector<ManifestEntry> read_manifest(std::istream& is);

/// Compact in-memory copy of an unnormalized rendered line.
struct RawLine {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> pixels;
  std::string transcript;

  render::LineImage to_image() const;
  static RawLine from_image(const render::LineImage& img);
};

/// Loads every image listed in the manifest.
std::vector<RawLine> load_dataset(const std::filesystem::path& manifest);

/// normalize + frame_slices
render::FrameSequence prepare(const render::LineImage& raw);

}  // namespace ocrlm::data
