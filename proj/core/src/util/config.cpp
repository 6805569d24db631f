#include "mantis/util/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

namespace mantis::util {

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  nlohmann::json doc;
  in >> doc;
  return Config(std::move(doc));
}

std::optional<nlohmann::json> Config::lookup(const std::string& dotted) const {
  std::string env_name = "MANTIS_";
  for (char c : dotted)
    env_name.push_back(c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (const char* env = std::getenv(env_name.c_str())) {
    auto parsed = nlohmann::json::parse(env, nullptr, /*allow_exceptions=*/false);
    if (!parsed.is_discarded()) return parsed;
    return nlohmann::json(std::string(env));
  }

  const nlohmann::json* cur = &doc_;
  size_t start = 0;
  while (true) {
    size_t pos = dotted.find('.', start);
    std::string key = dotted.substr(start, pos == std::string::npos ? pos : pos - start);
    if (!cur->is_object() || !cur->contains(key)) return std::nullopt;
    cur = &(*cur)[key];
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return *cur;
}

}  // namespace mantis::util
