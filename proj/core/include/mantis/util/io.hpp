#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mantis/util/strings.hpp"

namespace mantis::util {

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Non-empty, non-comment lines, lowercased. The shape of every bundled list file.
inline std::vector<std::string> read_list_file(const std::string& path) {
  std::vector<std::string> out;
  for (auto& line : read_lines(path)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(to_lower(t));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

inline std::string bundled_data_dir() {
  if (const char* env = std::getenv("MANTIS_DATA_DIR")) return env;
#ifdef MANTIS_BUNDLED_DATA_DIR
  return MANTIS_BUNDLED_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace mantis::util
