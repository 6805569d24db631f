#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace mantis::util {

// One declarative config document. Values are looked up by dotted path
// ("train.epochs") and can be overridden by MANTIS_* environment variables
// (MANTIS_TRAIN_EPOCHS). Env values are parsed as JSON when possible and fall
// back to raw strings.
class Config {
 public:
  Config() : doc_(nlohmann::json::object()) {}
  explicit Config(nlohmann::json doc) : doc_(std::move(doc)) {}

  static Config load(const std::string& path);

  template <typename T>
  T get(const std::string& dotted, T fallback) const {
    if (auto v = lookup(dotted); v.has_value()) {
      try {
        return v->get<T>();
      } catch (const nlohmann::json::exception&) {
        throw std::runtime_error("config value for '" + dotted + "' has wrong type");
      }
    }
    return fallback;
  }

  template <typename T>
  T require(const std::string& dotted) const {
    if (auto v = lookup(dotted); v.has_value()) return v->get<T>();
    throw std::runtime_error("missing required config key: " + dotted);
  }

  bool has(const std::string& dotted) const { return lookup(dotted).has_value(); }

  const nlohmann::json& raw() const { return doc_; }

 private:
  std::optional<nlohmann::json> lookup(const std::string& dotted) const;

  nlohmann::json doc_;
};

}  // namespace mantis::util
