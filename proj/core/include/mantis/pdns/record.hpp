#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace mantis::pdns {

enum class RrType : uint8_t { A = 0, NS = 1, SOA = 2, MX = 3 };

const char* rrtype_name(RrType t);
std::optional<RrType> rrtype_from_name(std::string_view s);

// One aggregated passive-DNS observation. rdata is an IPv4 dotted quad for A
// records and a domain name for NS/MX (rdata) and SOA (MNAME).
struct DnsRecord {
  std::string rrname;
  RrType rrtype = RrType::A;
  std::string rdata;
  int64_t time_first = 0;
  int64_t time_last = 0;
  int64_t count = 0;
};

// [start, end) in unix seconds.
struct TimeWindow {
  int64_t start = 0;
  int64_t end = 0;

  TimeWindow() = default;
  TimeWindow(int64_t s, int64_t e);

  static TimeWindow all();

  // Record spans are inclusive on both ends.
  bool intersects(int64_t time_first, int64_t time_last) const {
    return time_first < end && time_last >= start;
  }
  bool intersects(const DnsRecord& r) const { return intersects(r.time_first, r.time_last); }
};

// Empty optional means the record is valid; otherwise the rejection reason.
std::optional<std::string> validate_record(const DnsRecord& r);

// Canonicalizes rrname (and rdata for name-valued types) in place.
void canonicalize_record(DnsRecord& r);

struct ParseResult {
  std::optional<DnsRecord> record;
  std::string error;  // set when record is empty
};

// One NDJSON object per line with fields rrname, rrtype, rdata, time_first,
// time_last, count.
ParseResult parse_record_line(std::string_view line);
std::string record_to_json_line(const DnsRecord& r);

}  // namespace mantis::pdns
