#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "mantis/pdns/record.hpp"

namespace mantis::pdns {

struct IngestReport {
  int64_t accepted = 0;
  int64_t rejected = 0;
  // First rejections with line number and reason; capped to keep reports small.
  std::vector<std::pair<int64_t, std::string>> rejections;
};

struct Resolution {
  std::string ip;
  int64_t time_last = 0;
  int64_t count = 0;
};

struct DomainSeen {
  std::string name;
  int64_t time_last = 0;
  int64_t count = 0;
};

struct HostingStats {
  bool present = false;  // false = key unknown in the window (absent marker)
  int64_t query_count = 0;
  double duration_days = 0.0;
  int64_t distinct_counterparties = 0;  // IPs for a domain, domains for an IP
  int64_t ns_count = 0;
  int64_t soa_count = 0;
  int64_t mx_count = 0;
};

// Time-indexed store of aggregated PDNS records. Single-writer ingest; once
// finalized, all query methods are const and safe from multiple threads.
class Store {
 public:
  // Parses NDJSON lines; malformed records are rejected per record and listed
  // in the report while ingest continues. Returns accepted-record count.
  int64_t ingest_stream(std::istream& in, IngestReport* report = nullptr);
  int64_t ingest_file(const std::string& path, IngestReport* report = nullptr);
  void add(const DnsRecord& r);  // programmatic ingest of a validated record

  // Merges duplicates (same rrname, rrtype, rdata): time_first=min,
  // time_last=max, count=sum; then builds the two indexes.
  void finalize();
  bool finalized() const { return finalized_; }

  // All A records of `domain` intersecting `window`, sorted by time_last
  // descending (ties by ip ascending).
  std::vector<Resolution> resolutions(const std::string& domain, const TimeWindow& window) const;

  // Domains with an A record to `ip` intersecting `window`, ranked by
  // time_last descending, ties broken by lexicographic name; at most `limit`.
  std::vector<std::string> recent_domains(const std::string& ip, const TimeWindow& window,
                                          int64_t limit) const;

  // Unbounded variant used by feature extraction.
  std::vector<DomainSeen> domains_on_ip(const std::string& ip, const TimeWindow& window) const;

  // Aggregates over records of a domain name or (A records of) an IP.
  HostingStats hosting_stats(const std::string& key, const TimeWindow& window) const;

  // All records under `name` intersecting `window`, any rrtype.
  std::vector<const DnsRecord*> records_for(const std::string& name,
                                            const TimeWindow& window) const;

  size_t record_count() const { return records_.size(); }
  const std::vector<DnsRecord>& records() const { return records_; }

  void save(const std::string& path) const;
  static Store load(const std::string& path);

 private:
  void require_finalized() const;

  // Building phase: keyed accumulation for duplicate merging.
  std::map<std::tuple<std::string, uint8_t, std::string>, DnsRecord> building_;

  // Finalized phase: records sorted by (rrname, rrtype, rdata), plus an
  // A-rdata index sorted by (ip, record index).
  std::vector<DnsRecord> records_;
  std::vector<std::pair<std::string, uint32_t>> a_by_ip_;
  bool finalized_ = false;
};

}  // namespace mantis::pdns
