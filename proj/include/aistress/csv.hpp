#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace aistress {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name, or -1.
  int column(const std::string& name) const;
};

/// Minimal comma-separated reader: no quoting, blank lines and '#' lines skipped.
CsvTable parse_csv(const std::string& text, bool has_header);
CsvTable read_csv(const std::filesystem::path& path, bool has_header);

bool is_number(const std::string& s);

/// Locale-independent general format with the given significant digits.
std::string fmt_sig(double v, int digits = 9);

/// Overwrites `path` with `text`; throws IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& text);
std::string read_file(const std::filesystem::path& path);

}  // namespace aistress
