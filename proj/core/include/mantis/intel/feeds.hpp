#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mantis::intel {

struct FeedEntry {
  std::string domain;
  int64_t first_seen = 0;
  int positives = 0;
  int total_scanners = 0;
};

// Scanner feed indexed by domain. File format: line-delimited
// `domain,first_seen,positives,total_scanners`, no header.
class Feed {
 public:
  static Feed load(const std::string& path);
  static Feed from_entries(std::vector<FeedEntry> entries);

  const FeedEntry* find(const std::string& domain) const;
  int positives_of(const std::string& domain) const;  // 0 when absent

  const std::vector<FeedEntry>& entries() const { return entries_; }

 private:
  std::vector<FeedEntry> entries_;
  std::map<std::string, size_t> by_domain_;
};

std::string feed_entry_to_line(const FeedEntry& e);

// One day of one top-list source: `rank,domain` CSV.
std::vector<std::string> load_toplist_file(const std::string& path);

}  // namespace mantis::intel
