#include "aistress/manifest.hpp"

#include <cstdio>

#include "aistress/csv.hpp"

namespace aistress {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string manifest_text(const RunManifest& m) {
  std::string s;
  s += "command = " + m.command_line + "\n";
  s += "config_hash = " + m.config_hash + "\n";
  s += "seed = " + (m.seed ? std::to_string(*m.seed) : std::string("none")) + "\n";
  s += "engine_version = " + m.engine_version + "\n";
  s += "wall_time_s = " + fmt_sig(m.wall_time_s, 6) + "\n";
  s += "outputs =\n";
  for (const auto& o : m.outputs) s += "  " + o + "\n";
  return s;
}

}  // namespace aistress
