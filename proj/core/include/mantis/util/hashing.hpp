#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mantis::util {

std::string sha256_hex(std::string_view bytes);
std::string sha256_file_hex(const std::string& path);

constexpr uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace mantis::util
