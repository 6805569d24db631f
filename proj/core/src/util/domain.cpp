#include "mantis/util/domain.hpp"

#include <mutex>
#include <stdexcept>

#include "mantis/util/io.hpp"
#include "mantis/util/strings.hpp"

namespace mantis::util {

bool is_valid_domain_name(std::string_view name) {
  if (name.empty() || name.size() > 253) return false;
  size_t label_len = 0;
  char prev = 0;
  for (size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    if (c == '.') {
      if (label_len == 0 || label_len > 63 || prev == '-') return false;
      label_len = 0;
    } else {
      bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
      if (!ok) return false;
      if (label_len == 0 && c == '-') return false;
      ++label_len;
      if (label_len > 63) return false;
    }
    prev = c;
  }
  return label_len > 0 && prev != '-';
}

std::string canonical_domain(std::string_view name) {
  std::string out = to_lower(name);
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

std::vector<std::string> labels_of(std::string_view name) {
  if (name.empty()) return {};
  return split(name, '.');
}

std::optional<uint32_t> parse_ipv4(std::string_view s) {
  uint32_t parts[4];
  int part = 0;
  uint32_t cur = 0;
  int digits = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '.') {
      if (digits == 0 || part > 3) return std::nullopt;
      parts[part++] = cur;
      cur = 0;
      digits = 0;
    } else if (s[i] >= '0' && s[i] <= '9') {
      cur = cur * 10 + static_cast<uint32_t>(s[i] - '0');
      if (cur > 255 || ++digits > 3) return std::nullopt;
    } else {
      return std::nullopt;
    }
  }
  if (part != 4) return std::nullopt;
  return (parts[0] << 24) | (parts[1] << 16) | (parts[2] << 8) | parts[3];
}

std::string format_ipv4(uint32_t addr) {
  return std::to_string(addr >> 24) + "." + std::to_string((addr >> 16) & 0xff) + "." +
         std::to_string((addr >> 8) & 0xff) + "." + std::to_string(addr & 0xff);
}

bool is_ipv4(std::string_view s) { return parse_ipv4(s).has_value(); }

std::string subnet24_key(uint32_t addr) { return format_ipv4(addr & 0xffffff00u) + "/24"; }

std::string subnet24_key(std::string_view dotted) {
  auto addr = parse_ipv4(dotted);
  if (!addr) throw std::invalid_argument("not an IPv4 address: " + std::string(dotted));
  return subnet24_key(*addr);
}

PublicSuffixList::PublicSuffixList(const std::vector<std::string>& suffixes) {
  for (const auto& s : suffixes) suffixes_.insert(canonical_domain(s));
}

PublicSuffixList PublicSuffixList::load(const std::string& path) {
  return PublicSuffixList(read_list_file(path));
}

const PublicSuffixList& PublicSuffixList::bundled() {
  static PublicSuffixList psl = load(bundled_data_dir() + "/public_suffix.txt");
  return psl;
}

bool PublicSuffixList::is_public_suffix(std::string_view name) const {
  return suffixes_.count(name) > 0;
}

std::string PublicSuffixList::apex(std::string_view name) const {
  auto labels = labels_of(name);
  if (labels.size() <= 1) return std::string(name);
  // Longest public suffix that is a proper suffix of the name; apex = one label more.
  for (size_t start = 1; start < labels.size(); ++start) {
    std::string suffix = labels[start];
    for (size_t j = start + 1; j < labels.size(); ++j) suffix += "." + labels[j];
    if (suffixes_.count(suffix)) {
      return labels[start - 1] + "." + suffix;
    }
  }
  // Unknown suffix: treat the last label as the TLD.
  return labels[labels.size() - 2] + "." + labels.back();
}

std::string PublicSuffixList::tld(std::string_view name) const {
  auto labels = labels_of(name);
  if (labels.empty()) return {};
  for (size_t start = 1; start < labels.size(); ++start) {
    std::string suffix = labels[start];
    for (size_t j = start + 1; j < labels.size(); ++j) suffix += "." + labels[j];
    if (suffixes_.count(suffix)) return suffix;
  }
  return labels.back();
}

}  // namespace mantis::util
