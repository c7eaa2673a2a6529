#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aistress {

inline constexpr const char* kEngineVersion = "1.0.0";

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

struct RunManifest {
  std::string command_line;
  std::string config_hash;  // hex FNV-1a of the canonical calibration text
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;
  std::string engine_version = kEngineVersion;
  double wall_time_s = 0.0;
};

std::string manifest_text(const RunManifest& m);

}  // namespace aistress
