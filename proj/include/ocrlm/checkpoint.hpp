#pragma once

// OCRP checkpoint format (little-endian):
//   "OCRP" | u32 version = 1 | u32 tensor count
//   per tensor: u32 name length | name bytes | u32 rank | u32 dims... |
//               f32 values, row-major
// The first tensor, `__config`, holds the integer model configuration.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>

#include "ocrlm/network.hpp"

namespace ocrlm::net {

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct Checkpoint {
  ModelConfig config;
  ParamSet params;
};

void save_checkpoint(std::ostream& os, const ModelConfig& cfg, const ParamSet& params);
Checkpoint load_checkpoint(std::istream& is);

void save_checkpoint(const std::filesystem::path& path, const ModelConfig& cfg,
                     const ParamSet& params);
Checkpoint load_checkpoint(const std::filesystem::path& path);

/// Rounds every value through 32-bit float, the precision stored on disk.
void round_to_float(ParamSet& params);

/// FNV-1a 64-bit hash, used for checkpoint and config provenance.
std::uint64_t fnv1a64(std::span<const char> bytes);
std::uint64_t file_checksum(const std::filesystem::path& path);

}  // namespace ocrlm::net
