#include "mantis/pdns/store.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <set>
#include <stdexcept>

#include "mantis/util/dates.hpp"
#include "mantis/util/domain.hpp"

namespace mantis::pdns {

namespace {
constexpr size_t kMaxReportedRejections = 64;
constexpr char kStoreMagic[] = "MANTISPDNS1";
}  // namespace

int64_t Store::ingest_stream(std::istream& in, IngestReport* report) {
  if (finalized_) throw std::logic_error("store already finalized; ingest is single-writer");
  int64_t accepted = 0, rejected = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto parsed = parse_record_line(line);
    if (!parsed.record) {
      ++rejected;
      if (report && report->rejections.size() < kMaxReportedRejections)
        report->rejections.emplace_back(line_no, parsed.error);
      continue;
    }
    add(*parsed.record);
    ++accepted;
  }
  if (report) {
    report->accepted += accepted;
    report->rejected += rejected;
  }
  return accepted;
}

int64_t Store::ingest_file(const std::string& path, IngestReport* report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open PDNS file " + path);
  return ingest_stream(in, report);
}

void Store::add(const DnsRecord& r) {
  if (finalized_) throw std::logic_error("store already finalized; ingest is single-writer");
  auto key = std::make_tuple(r.rrname, static_cast<uint8_t>(r.rrtype), r.rdata);
  auto [it, inserted] = building_.emplace(std::move(key), r);
  if (!inserted) {
    DnsRecord& cur = it->second;
    cur.time_first = std::min(cur.time_first, r.time_first);
    cur.time_last = std::max(cur.time_last, r.time_last);
    cur.count += r.count;
  }
}

void Store::finalize() {
  if (finalized_) return;
  records_.reserve(records_.size() + building_.size());
  for (auto& [key, rec] : building_) records_.push_back(std::move(rec));
  building_.clear();
  std::sort(records_.begin(), records_.end(), [](const DnsRecord& a, const DnsRecord& b) {
    return std::tie(a.rrname, a.rrtype, a.rdata) < std::tie(b.rrname, b.rrtype, b.rdata);
  });
  a_by_ip_.clear();
  for (uint32_t i = 0; i < records_.size(); ++i) {
    if (records_[i].rrtype == RrType::A) a_by_ip_.emplace_back(records_[i].rdata, i);
  }
  std::sort(a_by_ip_.begin(), a_by_ip_.end());
  finalized_ = true;
}

void Store::require_finalized() const {
  if (!finalized_) throw std::logic_error("store not finalized; call finalize() after ingest");
}

std::vector<const DnsRecord*> Store::records_for(const std::string& name,
                                                 const TimeWindow& window) const {
  require_finalized();
  std::vector<const DnsRecord*> out;
  auto lo = std::lower_bound(records_.begin(), records_.end(), name,
                             [](const DnsRecord& r, const std::string& n) { return r.rrname < n; });
  for (auto it = lo; it != records_.end() && it->rrname == name; ++it) {
    if (window.intersects(*it)) out.push_back(&*it);
  }
  return out;
}

std::vector<Resolution> Store::resolutions(const std::string& domain,
                                           const TimeWindow& window) const {
  std::vector<Resolution> out;
  for (const DnsRecord* r : records_for(domain, window)) {
    if (r->rrtype == RrType::A) out.push_back({r->rdata, r->time_last, r->count});
  }
  std::sort(out.begin(), out.end(), [](const Resolution& a, const Resolution& b) {
    if (a.time_last != b.time_last) return a.time_last > b.time_last;
    return a.ip < b.ip;
  });
  return out;
}

std::vector<DomainSeen> Store::domains_on_ip(const std::string& ip,
                                             const TimeWindow& window) const {
  require_finalized();
  std::vector<DomainSeen> out;
  auto lo = std::lower_bound(a_by_ip_.begin(), a_by_ip_.end(), std::make_pair(ip, 0u));
  for (auto it = lo; it != a_by_ip_.end() && it->first == ip; ++it) {
    const DnsRecord& r = records_[it->second];
    if (window.intersects(r)) out.push_back({r.rrname, r.time_last, r.count});
  }
  std::sort(out.begin(), out.end(), [](const DomainSeen& a, const DomainSeen& b) {
    if (a.time_last != b.time_last) return a.time_last > b.time_last;
    return a.name < b.name;
  });
  return out;
}

std::vector<std::string> Store::recent_domains(const std::string& ip, const TimeWindow& window,
                                               int64_t limit) const {
  if (limit < 1) throw std::invalid_argument("recent_domains requires limit >= 1");
  auto seen = domains_on_ip(ip, window);
  std::vector<std::string> out;
  out.reserve(std::min<size_t>(seen.size(), static_cast<size_t>(limit)));
  for (const auto& d : seen) {
    if (static_cast<int64_t>(out.size()) >= limit) break;
    out.push_back(d.name);
  }
  return out;
}

HostingStats Store::hosting_stats(const std::string& key, const TimeWindow& window) const {
  require_finalized();
  HostingStats stats;
  int64_t span_min = INT64_MAX, span_max = INT64_MIN;
  auto clip_span = [&](const DnsRecord& r) {
    span_min = std::min(span_min, std::max(r.time_first, window.start));
    span_max = std::max(span_max, std::min(r.time_last, window.end));
  };

  if (util::is_ipv4(key)) {
    std::set<std::string> names;
    auto lo = std::lower_bound(a_by_ip_.begin(), a_by_ip_.end(), std::make_pair(key, 0u));
    for (auto it = lo; it != a_by_ip_.end() && it->first == key; ++it) {
      const DnsRecord& r = records_[it->second];
      if (!window.intersects(r)) continue;
      stats.present = true;
      stats.query_count += r.count;
      names.insert(r.rrname);
      clip_span(r);
    }
    stats.distinct_counterparties = static_cast<int64_t>(names.size());
  } else {
    std::set<std::string> ips;
    for (const DnsRecord* r : records_for(key, window)) {
      stats.present = true;
      stats.query_count += r->count;
      clip_span(*r);
      switch (r->rrtype) {
        case RrType::A: ips.insert(r->rdata); break;
        case RrType::NS: ++stats.ns_count; break;
        case RrType::SOA: ++stats.soa_count; break;
        case RrType::MX: ++stats.mx_count; break;
      }
    }
    stats.distinct_counterparties = static_cast<int64_t>(ips.size());
  }
  if (stats.present) {
    stats.duration_days =
        static_cast<double>(span_max - span_min) / static_cast<double>(util::kSecondsPerDay);
    if (stats.duration_days < 0) stats.duration_days = 0;
  }
  return stats;
}

namespace {

void put_u64(std::ostream& out, uint64_t v) { out.write(reinterpret_cast<const char*>(&v), 8); }
void put_i64(std::ostream& out, int64_t v) { out.write(reinterpret_cast<const char*>(&v), 8); }
void put_str(std::ostream& out, const std::string& s) {
  put_u64(out, s.size());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}
uint64_t get_u64(std::istream& in) {
  uint64_t v = 0;
  in.read(reinterpret_cast<char*>(&v), 8);
  return v;
}
int64_t get_i64(std::istream& in) {
  int64_t v = 0;
  in.read(reinterpret_cast<char*>(&v), 8);
  return v;
}
std::string get_str(std::istream& in) {
  uint64_t n = get_u64(in);
  std::string s(n, '\0');
  in.read(s.data(), static_cast<std::streamsize>(n));
  return s;
}

}  // namespace

void Store::save(const std::string& path) const {
  require_finalized();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write store file " + path);
  out.write(kStoreMagic, sizeof(kStoreMagic) - 1);
  put_u64(out, records_.size());
  for (const auto& r : records_) {
    put_str(out, r.rrname);
    out.put(static_cast<char>(r.rrtype));
    put_str(out, r.rdata);
    put_i64(out, r.time_first);
    put_i64(out, r.time_last);
    put_i64(out, r.count);
  }
  if (!out) throw std::runtime_error("short write to " + path);
}

Store Store::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open store file " + path);
  char magic[sizeof(kStoreMagic) - 1];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kStoreMagic, sizeof(magic)) != 0)
    throw std::runtime_error("not a store file: " + path);
  Store store;
  uint64_t n = get_u64(in);
  store.records_.reserve(n);
  for (uint64_t i = 0; i < n; ++i) {
    DnsRecord r;
    r.rrname = get_str(in);
    r.rrtype = static_cast<RrType>(in.get());
    r.rdata = get_str(in);
    r.time_first = get_i64(in);
    r.time_last = get_i64(in);
    r.count = get_i64(in);
    store.records_.push_back(std::move(r));
  }
  if (!in) throw std::runtime_error("truncated store file: " + path);
  for (uint32_t i = 0; i < store.records_.size(); ++i) {
    if (store.records_[i].rrtype == RrType::A)
      store.a_by_ip_.emplace_back(store.records_[i].rdata, i);
  }
  std::sort(store.a_by_ip_.begin(), store.a_by_ip_.end());
  store.finalized_ = true;
  return store;
}

}  // namespace mantis::pdns
