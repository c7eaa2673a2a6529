#include "aistress/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace aistress {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

CsvTable parse_csv(const std::string& text, bool has_header) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto cells = split(body);
    if (first && has_header) t.header = std::move(cells);
    else t.rows.push_back(std::move(cells));
    first = false;
  }
  return t;
}

CsvTable read_csv(const std::filesystem::path& path, bool has_header) {
  return parse_csv(read_file(path), has_header);
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  double v;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string fmt_sig(double v, int digits) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return std::string(buf, ptr);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace aistress
