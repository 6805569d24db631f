#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mantis::util {

// Syntactic validity per RFC-style limits: labels 1..63 chars, total <= 253,
// no empty labels, charset [a-z0-9-_], labels not starting/ending with '-'.
bool is_valid_domain_name(std::string_view name);

// Lowercases and strips one trailing dot. Does not validate.
std::string canonical_domain(std::string_view name);

std::vector<std::string> labels_of(std::string_view name);

std::optional<uint32_t> parse_ipv4(std::string_view s);
std::string format_ipv4(uint32_t addr);
bool is_ipv4(std::string_view s);

// "a.b.c.0/24" for the address's class-C subnet.
std::string subnet24_key(uint32_t addr);
std::string subnet24_key(std::string_view dotted);

// Registrable-domain extraction against a fixed public-suffix snapshot.
// The snapshot is a plain list of suffixes ("com", "co.uk", ...).
class PublicSuffixList {
 public:
  PublicSuffixList() = default;
  explicit PublicSuffixList(const std::vector<std::string>& suffixes);

  static PublicSuffixList load(const std::string& path);
  static const PublicSuffixList& bundled();

  bool is_public_suffix(std::string_view name) const;

  // example.co.uk -> example.co.uk; a.b.example.com -> example.com.
  // A name that is itself a public suffix (or unknown single label) maps to itself.
  std::string apex(std::string_view name) const;

  // TLD = the longest matching public suffix; falls back to the last label.
  std::string tld(std::string_view name) const;

  bool empty() const { return suffixes_.empty(); }

 private:
  std::set<std::string, std::less<>> suffixes_;
};

}  // namespace mantis::util
