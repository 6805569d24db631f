#pragma once

#include <set>
#include <string>
#include <vector>

namespace mantis::util {

// Bundled reference lists under core/data (path overridable with MANTIS_DATA_DIR).
struct Wordlists {
  std::vector<std::string> brands;
  std::vector<std::string> dictionary;
  std::set<std::string> suspicious_tlds;
  std::set<std::string> valid_tlds;
  std::set<std::string> reputable_tlds;
  std::set<std::string> webhosting_apexes;

  static const Wordlists& bundled();
  static Wordlists load(const std::string& dir);
};

}  // namespace mantis::util
