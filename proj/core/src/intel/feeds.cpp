#include "mantis/intel/feeds.hpp"

#include <stdexcept>

#include "mantis/util/io.hpp"
#include "mantis/util/strings.hpp"

namespace mantis::intel {

Feed Feed::load(const std::string& path) {
  std::vector<FeedEntry> entries;
  int64_t line_no = 0;
  for (const auto& line : util::read_lines(path)) {
    ++line_no;
    auto t = util::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto parts = util::split(t, ',');
    if (parts.size() != 4)
      throw std::runtime_error("feed " + path + ": bad line " + std::to_string(line_no));
    FeedEntry e;
    e.domain = util::to_lower(util::trim(parts[0]));
    e.first_seen = std::stoll(parts[1]);
    e.positives = std::stoi(parts[2]);
    e.total_scanners = std::stoi(parts[3]);
    if (e.positives < 0 || e.positives > e.total_scanners)
      throw std::runtime_error("feed " + path + ": positives out of range, line " +
                               std::to_string(line_no));
    entries.push_back(std::move(e));
  }
  return from_entries(std::move(entries));
}

Feed Feed::from_entries(std::vector<FeedEntry> entries) {
  Feed f;
  f.entries_ = std::move(entries);
  for (size_t i = 0; i < f.entries_.size(); ++i) {
    // Keep the earliest-first_seen entry when a domain repeats.
    auto [it, inserted] = f.by_domain_.emplace(f.entries_[i].domain, i);
    if (!inserted && f.entries_[i].first_seen < f.entries_[it->second].first_seen) it->second = i;
  }
  return f;
}

const FeedEntry* Feed::find(const std::string& domain) const {
  auto it = by_domain_.find(domain);
  return it == by_domain_.end() ? nullptr : &entries_[it->second];
}

int Feed::positives_of(const std::string& domain) const {
  const FeedEntry* e = find(domain);
  return e ? e->positives : 0;
}

std::string feed_entry_to_line(const FeedEntry& e) {
  return e.domain + "," + std::to_string(e.first_seen) + "," + std::to_string(e.positives) + "," +
         std::to_string(e.total_scanners);
}

std::vector<std::string> load_toplist_file(const std::string& path) {
  std::vector<std::string> out;
  for (const auto& line : util::read_lines(path)) {
    auto t = util::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto comma = t.find(',');
    if (comma == std::string_view::npos) throw std::runtime_error("bad top-list line in " + path);
    out.push_back(util::to_lower(util::trim(t.substr(comma + 1))));
  }
  return out;
}

}  // namespace mantis::intel
