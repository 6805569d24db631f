#include "mantis/pdns/record.hpp"

#include <json.hpp>

#include "mantis/util/domain.hpp"
#include "mantis/util/strings.hpp"

namespace mantis::pdns {

const char* rrtype_name(RrType t) {
  switch (t) {
    case RrType::A: return "A";
    case RrType::NS: return "NS";
    case RrType::SOA: return "SOA";
    case RrType::MX: return "MX";
  }
  return "?";
}

std::optional<RrType> rrtype_from_name(std::string_view s) {
  if (s == "A" || s == "a") return RrType::A;
  if (s == "NS" || s == "ns") return RrType::NS;
  if (s == "SOA" || s == "soa") return RrType::SOA;
  if (s == "MX" || s == "mx") return RrType::MX;
  return std::nullopt;
}

TimeWindow::TimeWindow(int64_t s, int64_t e) : start(s), end(e) {
  if (!(start < end)) throw std::invalid_argument("TimeWindow requires start < end");
}

TimeWindow TimeWindow::all() { return TimeWindow(INT64_MIN / 2, INT64_MAX / 2); }

void canonicalize_record(DnsRecord& r) {
  r.rrname = util::canonical_domain(r.rrname);
  if (r.rrtype != RrType::A) r.rdata = util::canonical_domain(r.rdata);
}

std::optional<std::string> validate_record(const DnsRecord& r) {
  if (!util::is_valid_domain_name(r.rrname)) return "invalid rrname: " + r.rrname;
  if (r.time_first > r.time_last) return "time_first > time_last";
  if (r.count < 1) return "count < 1";
  if (r.rrtype == RrType::A) {
    if (!util::is_ipv4(r.rdata)) return "rdata is not IPv4 for A record: " + r.rdata;
  } else {
    if (!util::is_valid_domain_name(r.rdata)) return "invalid rdata name: " + r.rdata;
  }
  return std::nullopt;
}

namespace {

// Fast path for the flat one-line objects the feeds use. Returns false on any
// shape it does not recognize; the caller then retries with a full parser.
bool scan_flat_object(std::string_view line, DnsRecord& out, int& fields) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i; };
  skip_ws();
  if (i >= line.size() || line[i] != '{') return false;
  ++i;
  fields = 0;
  while (true) {
    skip_ws();
    if (i < line.size() && line[i] == '}') return true;
    if (i >= line.size() || line[i] != '"') return false;
    size_t key_start = ++i;
    while (i < line.size() && line[i] != '"') {
      if (line[i] == '\\') return false;
      ++i;
    }
    if (i >= line.size()) return false;
    std::string_view key = line.substr(key_start, i - key_start);
    ++i;
    skip_ws();
    if (i >= line.size() || line[i] != ':') return false;
    ++i;
    skip_ws();
    std::string_view value;
    bool quoted = false;
    if (i < line.size() && line[i] == '"') {
      quoted = true;
      size_t vs = ++i;
      while (i < line.size() && line[i] != '"') {
        if (line[i] == '\\') return false;
        ++i;
      }
      if (i >= line.size()) return false;
      value = line.substr(vs, i - vs);
      ++i;
    } else {
      size_t vs = i;
      while (i < line.size() && line[i] != ',' && line[i] != '}') ++i;
      value = util::trim(line.substr(vs, i - vs));
    }
    auto to_int = [](std::string_view v, int64_t& dst) {
      if (v.empty()) return false;
      bool neg = v[0] == '-';
      size_t p = neg ? 1 : 0;
      if (p >= v.size()) return false;
      int64_t acc = 0;
      for (; p < v.size(); ++p) {
        if (v[p] < '0' || v[p] > '9') return false;
        acc = acc * 10 + (v[p] - '0');
      }
      dst = neg ? -acc : acc;
      return true;
    };
    if (key == "rrname") {
      out.rrname = std::string(value);
      ++fields;
    } else if (key == "rrtype") {
      auto t = rrtype_from_name(value);
      if (!t) return false;
      out.rrtype = *t;
      ++fields;
    } else if (key == "rdata") {
      out.rdata = std::string(value);
      ++fields;
    } else if (key == "time_first") {
      if (quoted || !to_int(value, out.time_first)) return false;
      ++fields;
    } else if (key == "time_last") {
      if (quoted || !to_int(value, out.time_last)) return false;
      ++fields;
    } else if (key == "count") {
      if (quoted || !to_int(value, out.count)) return false;
      ++fields;
    }
    skip_ws();
    if (i < line.size() && line[i] == ',') {
      ++i;
      continue;
    }
    if (i < line.size() && line[i] == '}') return true;
    return false;
  }
}

}  // namespace

ParseResult parse_record_line(std::string_view line) {
  DnsRecord rec;
  int fields = 0;
  if (!scan_flat_object(line, rec, fields)) {
    auto doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) return {std::nullopt, "malformed JSON"};
    fields = 0;
    try {
      if (doc.contains("rrname")) { rec.rrname = doc["rrname"].get<std::string>(); ++fields; }
      if (doc.contains("rrtype")) {
        auto t = rrtype_from_name(doc["rrtype"].get<std::string>());
        if (!t) return {std::nullopt, "unknown rrtype"};
        rec.rrtype = *t;
        ++fields;
      }
      if (doc.contains("rdata")) { rec.rdata = doc["rdata"].get<std::string>(); ++fields; }
      if (doc.contains("time_first")) { rec.time_first = doc["time_first"].get<int64_t>(); ++fields; }
      if (doc.contains("time_last")) { rec.time_last = doc["time_last"].get<int64_t>(); ++fields; }
      if (doc.contains("count")) { rec.count = doc["count"].get<int64_t>(); ++fields; }
    } catch (const nlohmann::json::exception& e) {
      return {std::nullopt, std::string("bad field type: ") + e.what()};
    }
  }
  if (fields != 6) return {std::nullopt, "missing fields (need rrname,rrtype,rdata,time_first,time_last,count)"};
  canonicalize_record(rec);
  if (auto reason = validate_record(rec)) return {std::nullopt, *reason};
  return {std::move(rec), {}};
}

std::string record_to_json_line(const DnsRecord& r) {
  std::string out;
  out.reserve(96 + r.rrname.size() + r.rdata.size());
  out += "{\"rrname\":\"";
  out += r.rrname;
  out += "\",\"rrtype\":\"";
  out += rrtype_name(r.rrtype);
  out += "\",\"rdata\":\"";
  out += r.rdata;
  out += "\",\"time_first\":";
  out += std::to_string(r.time_first);
  out += ",\"time_last\":";
  out += std::to_string(r.time_last);
  out += ",\"count\":";
  out += std::to_string(r.count);
  out += "}";
  return out;
}

}  // namespace mantis::pdns
