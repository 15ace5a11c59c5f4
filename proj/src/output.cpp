/* output.cpp */
#include "sdsform/output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sdsform/errors.hpp"

namespace sdsform {

std::string g17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("cannot open for writing: " + tmp.string());
    os << content;
    if (!os) throw ConfigError("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  if (!header.empty()) emit(header);
  for (const auto& row : rows) emit(row);
  write_text_atomic(path, out);
}

std::vector<std::string> num_row(std::initializer_list<double> vals) {
  std::vector<std::string> cells;
  cells.reserve(vals.size());
  for (double v : vals) cells.push_back(g17(v));
  return cells;
}

}  // namespace sdsform
