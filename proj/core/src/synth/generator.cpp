#include "mantis/synth/generator.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "mantis/intel/feeds.hpp"
#include "mantis/pdns/record.hpp"
#include "mantis/pdns/store.hpp"
#include "mantis/util/dates.hpp"
#include "mantis/util/domain.hpp"
#include "mantis/util/hashing.hpp"
#include "mantis/util/io.hpp"
#include "mantis/util/rng.hpp"
#include "mantis/util/wordlists.hpp"

namespace mantis::synth {

using pdns::DnsRecord;
using pdns::RrType;
using util::kSecondsPerDay;
using util::Rng;
using util::uniform01;
using util::uniform_below;

const char* name_style_str(NameStyle s) {
  switch (s) {
    case NameStyle::brand_squat: return "brand_squat";
    case NameStyle::random_token: return "random_token";
    case NameStyle::dga_like: return "dga_like";
  }
  return "?";
}

NameStyle name_style_from(const std::string& s) {
  if (s == "brand_squat") return NameStyle::brand_squat;
  if (s == "random_token") return NameStyle::random_token;
  if (s == "dga_like") return NameStyle::dga_like;
  throw std::invalid_argument("unknown name_style: " + s);
}

void WorldSpec::validate() const {
  auto frac = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (days < 1) throw std::invalid_argument("days must be >= 1");
  if (n_benign < 0) throw std::invalid_argument("n_benign must be >= 0");
  if (!frac(shared_hosting_frac) || !frac(detect_prob) || !frac(subthreshold_prob) ||
      !frac(sinkhole_frac))
    throw std::invalid_argument("fractions must lie in [0,1]");
  if (detection_delay_days < 1) throw std::invalid_argument("detection_delay_days must be >= 1");
  std::set<std::string> ids;
  for (const auto& c : campaigns) {
    if (c.n_domains < 1) throw std::invalid_argument("campaign n_domains must be >= 1");
    if (c.daily_new_domains < 1 || c.daily_new_domains > c.n_domains)
      throw std::invalid_argument("campaign " + c.campaign_id +
                                  ": daily_new_domains must be in [1, n_domains]");
    if (!frac(c.ip_reuse_prob)) throw std::invalid_argument("ip_reuse_prob must lie in [0,1]");
    if (!frac(c.aged_frac)) throw std::invalid_argument("aged_frac must lie in [0,1]");
    if (c.lifetime_days < 1) throw std::invalid_argument("lifetime_days must be >= 1");
    if (!ids.insert(c.campaign_id).second)
      throw std::invalid_argument("duplicate campaign_id " + c.campaign_id);
  }
}

WorldSpec WorldSpec::defaults() {
  WorldSpec spec;
  const char* styles[10] = {"brand_squat", "brand_squat", "brand_squat", "brand_squat",
                            "brand_squat", "random_token", "random_token", "random_token",
                            "dga_like",    "dga_like"};
  for (int i = 0; i < 10; ++i) {
    CampaignSpec c;
    c.campaign_id = "c" + std::to_string(i);
    c.n_domains = 300;
    c.daily_new_domains = 10;
    c.ip_reuse_prob = 0.8;
    c.name_style = name_style_from(styles[i]);
    c.lifetime_days = 3;
    c.aged_frac = c.name_style == NameStyle::random_token ? 0.8 : 0.15;
    spec.campaigns.push_back(std::move(c));
  }
  return spec;
}

WorldSpec WorldSpec::tiny(uint64_t seed) {
  WorldSpec spec;
  spec.days = 16;
  spec.n_benign = 3000;
  spec.n_edu_gov = 20;
  spec.toplist_size = 300;
  spec.rng_seed = seed;
  const char* styles[4] = {"brand_squat", "brand_squat", "random_token", "dga_like"};
  for (int i = 0; i < 4; ++i) {
    CampaignSpec c;
    c.campaign_id = "t" + std::to_string(i);
    c.n_domains = 120;
    c.daily_new_domains = 8;
    c.ip_reuse_prob = 0.8;
    c.name_style = name_style_from(styles[i]);
    c.lifetime_days = 3;
    c.aged_frac = c.name_style == NameStyle::random_token ? 0.8 : 0.15;
    spec.campaigns.push_back(std::move(c));
  }
  return spec;
}

std::string WorldSpec::to_json() const {
  nlohmann::ordered_json j;
  j["start_date"] = start_date;
  j["days"] = days;
  j["n_benign"] = n_benign;
  j["n_edu_gov"] = n_edu_gov;
  j["shared_hosting_frac"] = shared_hosting_frac;
  j["rng_seed"] = rng_seed;
  j["detection_delay_days"] = detection_delay_days;
  j["detect_prob"] = detect_prob;
  j["subthreshold_prob"] = subthreshold_prob;
  j["sinkhole_frac"] = sinkhole_frac;
  j["toplist_size"] = toplist_size;
  j["campaigns"] = nlohmann::ordered_json::array();
  for (const auto& c : campaigns) {
    nlohmann::ordered_json cj;
    cj["campaign_id"] = c.campaign_id;
    cj["n_domains"] = c.n_domains;
    cj["ip_pool"] = c.ip_pool;
    cj["daily_new_domains"] = c.daily_new_domains;
    cj["ip_reuse_prob"] = c.ip_reuse_prob;
    cj["name_style"] = name_style_str(c.name_style);
    cj["lifetime_days"] = c.lifetime_days;
    cj["aged_frac"] = c.aged_frac;
    j["campaigns"].push_back(std::move(cj));
  }
  return j.dump(2);
}

WorldSpec WorldSpec::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  WorldSpec s;
  s.start_date = j.value("start_date", s.start_date);
  s.days = j.value("days", s.days);
  s.n_benign = j.value("n_benign", s.n_benign);
  s.n_edu_gov = j.value("n_edu_gov", s.n_edu_gov);
  s.shared_hosting_frac = j.value("shared_hosting_frac", s.shared_hosting_frac);
  s.rng_seed = j.value("rng_seed", s.rng_seed);
  s.detection_delay_days = j.value("detection_delay_days", s.detection_delay_days);
  s.detect_prob = j.value("detect_prob", s.detect_prob);
  s.subthreshold_prob = j.value("subthreshold_prob", s.subthreshold_prob);
  s.sinkhole_frac = j.value("sinkhole_frac", s.sinkhole_frac);
  s.toplist_size = j.value("toplist_size", s.toplist_size);
  if (j.contains("campaigns")) {
    for (const auto& cj : j["campaigns"]) {
      CampaignSpec c;
      c.campaign_id = cj.value("campaign_id", "");
      c.n_domains = cj.value("n_domains", c.n_domains);
      c.ip_pool = cj.value("ip_pool", c.ip_pool);
      c.daily_new_domains = cj.value("daily_new_domains", c.daily_new_domains);
      c.ip_reuse_prob = cj.value("ip_reuse_prob", c.ip_reuse_prob);
      c.name_style = name_style_from(cj.value("name_style", std::string("brand_squat")));
      c.lifetime_days = cj.value("lifetime_days", c.lifetime_days);
      c.aged_frac = cj.value("aged_frac", c.aged_frac);
      s.campaigns.push_back(std::move(c));
    }
  }
  return s;
}

std::string Corpus::toplist_file(const std::string& source, const std::string& date) const {
  return dir + "/toplists/" + source + "_" + date + ".csv";
}

Corpus Corpus::at(const std::string& dir) {
  Corpus c;
  c.dir = dir;
  c.pdns_file = dir + "/pdns.ndjson";
  c.feed_file = dir + "/feed.csv";
  c.labels_file = dir + "/labels.csv";
  c.sinkholes_file = dir + "/sinkholes.txt";
  c.asn_map_file = dir + "/asn_map.csv";
  c.world_file = dir + "/world.json";
  c.toplist_sources = {"toplist_a", "toplist_b"};
  return c;
}

namespace {

struct Registrars {
  std::vector<std::string> clean = {"cloudnsx.com",   "registrarone.com", "hostedzone.net",
                                    "dnsharbor.com",  "zonekeeper.net",   "steadydns.com",
                                    "anchorhost.net", "bluewire-dns.com"};
  std::vector<std::string> cheap = {"dnspanel.net",  "cheapns.com",   "fastzone.net",
                                    "quickdns.icu",  "zippyns.xyz",   "privacydns.org"};
};

class IpAllocator {
 public:
  IpAllocator(uint32_t base, int per_subnet) : next_(base), per_subnet_(per_subnet) {}

  std::string allocate() {
    uint32_t addr = next_;
    ++count_in_subnet_;
    if (count_in_subnet_ >= per_subnet_) {
      next_ = (next_ & 0xffffff00u) + 256 + 1;
      count_in_subnet_ = 0;
    } else {
      ++next_;
    }
    return util::format_ipv4(addr);
  }

 private:
  uint32_t next_;
  int per_subnet_;
  int count_in_subnet_ = 0;
};

uint32_t ip_base(int a, int b) {
  return (static_cast<uint32_t>(a) << 24) | (static_cast<uint32_t>(b) << 16) | 1;
}

struct FeedRow {
  std::string domain;
  int64_t first_seen;
  int positives;
  int total;
};

struct World {
  const WorldSpec& spec;
  int64_t t0;
  Rng name_rng;
  std::set<std::string> used_names;
  std::vector<DnsRecord> records;
  std::vector<FeedRow> feed;
  std::vector<std::pair<std::string, std::string>> labels;  // domain,label
  std::map<std::string, std::string> asn_of_subnet;
  std::vector<std::string> sinkhole_ips;
  Registrars registrars;
  const util::Wordlists& words = util::Wordlists::bundled();

  explicit World(const WorldSpec& s)
      : spec(s), t0(util::day_start(s.start_date)), name_rng(util::make_rng(s.rng_seed, "names")) {}

  void add_record(const std::string& name, RrType t, const std::string& rdata, int64_t tf,
                  int64_t tl, int64_t count) {
    records.push_back(DnsRecord{name, t, rdata, tf, std::max(tf, tl), std::max<int64_t>(1, count)});
  }

  int64_t day_ts(int day, int64_t offset) const { return t0 + day * kSecondsPerDay + offset; }

  std::string fresh_name(std::string base) {
    if (used_names.insert(base).second) return base;
    for (int i = 2;; ++i) {
      auto dot = base.find('.');
      std::string candidate = base.substr(0, dot) + std::to_string(i) + base.substr(dot);
      if (used_names.insert(candidate).second) return candidate;
    }
  }

  const std::string& pick(const std::vector<std::string>& v, Rng& rng) {
    return v[uniform_below(rng, v.size())];
  }
};

std::string weighted_benign_tld(Rng& rng) {
  double r = uniform01(rng);
  if (r < 0.55) return "com";
  if (r < 0.67) return "net";
  if (r < 0.77) return "org";
  if (r < 0.83) return "io";
  if (r < 0.87) return "co";
  if (r < 0.90) return "info";
  if (r < 0.92) return "biz";
  if (r < 0.94) return "us";
  if (r < 0.96) return "de";
  if (r < 0.98) return "fr";
  return "nl";
}

std::string benign_name(World& w, Rng& rng) {
  const auto& dict = w.words.dictionary;
  double p = uniform01(rng);
  std::string stem;
  if (p < 0.25) {
    stem = w.pick(dict, rng);
  } else if (p < 0.60) {
    stem = w.pick(dict, rng) + w.pick(dict, rng);
  } else if (p < 0.80) {
    stem = w.pick(dict, rng) + "-" + w.pick(dict, rng);
  } else if (p < 0.92) {
    stem = w.pick(dict, rng) + std::to_string(uniform_below(rng, 90) + 10);
  } else {
    stem = w.pick(dict, rng) + w.pick(dict, rng) + std::to_string(uniform_below(rng, 9) + 1);
  }
  return w.fresh_name(stem + "." + weighted_benign_tld(rng));
}

std::string homograph(std::string s, Rng& rng) {
  const std::pair<char, char> swaps[] = {{'o', '0'}, {'l', '1'}, {'i', '1'}, {'e', '3'}, {'a', '4'}};
  int applied = 0;
  int want = 1 + static_cast<int>(uniform_below(rng, 2));
  for (size_t i = 0; i < s.size() && applied < want; ++i) {
    for (auto [from, to] : swaps) {
      if (s[i] == from && uniform01(rng) < 0.4) {
        s[i] = to;
        ++applied;
        break;
      }
    }
  }
  return s;
}

std::string campaign_name(World& w, NameStyle style, Rng& rng) {
  static const std::vector<std::string> squat_tlds = {"com", "net",  "xyz",  "top",  "icu",
                                                      "online", "site", "shop", "live", "club"};
  static const std::vector<std::string> dga_tlds = {"tk", "ml", "ga", "cf", "gq", "xyz", "top", "icu"};
  switch (style) {
    case NameStyle::brand_squat: {
      const std::string& brand = w.pick(w.words.brands, rng);
      const std::string& word = w.pick(w.words.dictionary, rng);
      std::string stem;
      double p = uniform01(rng);
      if (p < 0.25) stem = brand + "-" + word;
      else if (p < 0.45) stem = word + "-" + brand;
      else if (p < 0.60) stem = "secure-" + brand + "-" + word;
      else if (p < 0.75) stem = brand + std::to_string(uniform_below(rng, 900) + 100);
      else if (p < 0.90) stem = homograph(brand, rng) + "-" + word;
      else stem = brand + "." + word;  // brand as subdomain of a squatted apex
      return w.fresh_name(stem + "." + w.pick(squat_tlds, rng));
    }
    case NameStyle::random_token: {
      std::string stem = w.pick(w.words.dictionary, rng) + w.pick(w.words.dictionary, rng);
      if (uniform01(rng) < 0.35) stem += std::to_string(uniform_below(rng, 90) + 10);
      return w.fresh_name(stem + "." + (uniform01(rng) < 0.7 ? "com" : "net"));
    }
    case NameStyle::dga_like: {
      static const char* consonants = "bcdfghjklmnpqrstvwxz";
      static const char* alnum = "abcdefghijklmnopqrstuvwxyz0123456789";
      size_t len = 8 + uniform_below(rng, 8);
      std::string stem;
      for (size_t i = 0; i < len; ++i) {
        bool vowelish = uniform01(rng) < 0.18;
        stem += vowelish ? "aeiou"[uniform_below(rng, 5)]
                         : (uniform01(rng) < 0.8 ? consonants[uniform_below(rng, 20)]
                                                 : alnum[uniform_below(rng, 36)]);
      }
      return w.fresh_name(stem + "." + w.pick(dga_tlds, rng));
    }
  }
  throw std::logic_error("unreachable");
}

void emit_benign_side_records(World& w, Rng& rng, const std::string& name, int64_t tf, int64_t tl,
                              bool self_ns) {
  const std::string& reg = w.pick(w.registrars.clean, rng);
  std::string ns_base = self_ns ? name : reg;
  w.add_record(name, RrType::NS, "ns1." + ns_base, tf, tl, 1 + uniform_below(rng, 20));
  w.add_record(name, RrType::NS, "ns2." + ns_base, tf, tl, 1 + uniform_below(rng, 20));
  if (uniform01(rng) < 0.7)
    w.add_record(name, RrType::SOA, "ns1." + ns_base, tf, tl, 1 + uniform_below(rng, 6));
  if (uniform01(rng) < 0.55)
    w.add_record(name, RrType::MX, "mail." + (uniform01(rng) < 0.5 ? name : reg), tf, tl,
                 1 + uniform_below(rng, 10));
}

}  // namespace

Corpus generate(const WorldSpec& spec, const std::string& out_dir) {
  spec.validate();
  World w(spec);
  Corpus corpus = Corpus::at(out_dir);
  std::filesystem::create_directories(out_dir + "/toplists");

  const int64_t world_end = w.day_ts(spec.days, 0) - 1;

  // Defender and attacker address space.
  for (int i = 0; i < 10; ++i) w.sinkhole_ips.push_back("192.0.2." + std::to_string(10 + i));
  std::vector<std::string> parking_ips;
  for (int i = 0; i < 10; ++i) parking_ips.push_back("44.44.44." + std::to_string(20 + i));
  w.asn_of_subnet["44.44.44.0/24"] = "AS64900";
  w.asn_of_subnet["192.0.2.0/24"] = "AS64999";

  // ---------- benign world ----------
  Rng rng_b = util::make_rng(spec.rng_seed, "benign");
  int n_pool = std::max(50, spec.n_benign / 6);
  IpAllocator benign_alloc(ip_base(20, 10), 120);
  std::vector<std::string> benign_pool;
  benign_pool.reserve(n_pool);
  for (int i = 0; i < n_pool; ++i) {
    auto ip = benign_alloc.allocate();
    auto subnet = util::subnet24_key(ip);
    if (!w.asn_of_subnet.count(subnet))
      w.asn_of_subnet[subnet] = "AS" + std::to_string(13000 + util::fnv1a64(subnet) % 40);
    benign_pool.push_back(std::move(ip));
  }
  std::vector<std::string> mega_ips;
  for (int i = 0; i < 15; ++i) {
    mega_ips.push_back("21.5.0." + std::to_string(10 + i));
  }
  w.asn_of_subnet["21.5.0.0/24"] = "AS13999";

  struct BenignInfo {
    std::string name;
    int64_t total_count;
    int first_active, last_active;
  };
  std::vector<BenignInfo> benign;
  benign.reserve(spec.n_benign + spec.n_edu_gov);

  auto emit_benign = [&](const std::string& name, bool edu_gov) {
    int first_active = static_cast<int>(uniform_below(rng_b, std::max(1, spec.days / 5)));
    int last_active = spec.days - 1 - static_cast<int>(uniform_below(rng_b, std::max(1, spec.days / 5)));
    if (last_active <= first_active) last_active = std::min(spec.days - 1, first_active + 1);
    int64_t tf = w.day_ts(first_active, 1800 + static_cast<int64_t>(uniform_below(rng_b, 3600)));
    int64_t tl = w.day_ts(last_active, 40000 + static_cast<int64_t>(uniform_below(rng_b, 40000)));
    tl = std::min(tl, world_end);
    int64_t total = 30 + static_cast<int64_t>(uniform_below(rng_b, 2500));

    bool mega = !edu_gov && uniform01(rng_b) < 0.03;
    int n_ips = (!mega && uniform01(rng_b) < 0.12) ? 2 : 1;
    if (mega) {
      w.add_record(name, RrType::A, w.pick(mega_ips, rng_b), tf, tl, total);
    } else if (n_ips == 1) {
      w.add_record(name, RrType::A, w.pick(benign_pool, rng_b), tf, tl, total);
    } else {
      int64_t mid = tf + (tl - tf) / 2;
      w.add_record(name, RrType::A, w.pick(benign_pool, rng_b), tf, mid, total / 2);
      w.add_record(name, RrType::A, w.pick(benign_pool, rng_b), mid + 1, tl, total - total / 2);
    }
    emit_benign_side_records(w, rng_b, name, tf, tl, /*self_ns=*/uniform01(rng_b) < 0.25);
    if (!edu_gov && uniform01(rng_b) < 0.2) {
      // One subdomain FQDN resolving alongside the apex.
      std::string sub = uniform01(rng_b) < 0.7 ? "www" : w.pick(w.words.dictionary, rng_b);
      w.add_record(sub + "." + name, RrType::A, mega ? w.pick(mega_ips, rng_b) : w.pick(benign_pool, rng_b),
                   tf, tl, std::max<int64_t>(1, total / 4));
    }
    benign.push_back({name, total, first_active, last_active});
    w.labels.emplace_back(name, "benign");
  };

  for (int i = 0; i < spec.n_benign; ++i) emit_benign(benign_name(w, rng_b), false);
  for (int i = 0; i < spec.n_edu_gov; ++i) {
    const auto& dict = w.words.dictionary;
    std::string stem = w.pick(dict, rng_b) + w.pick(dict, rng_b);
    std::string tld = uniform01(rng_b) < 0.6 ? "edu" : "gov";
    emit_benign(w.fresh_name(stem + "." + tld), true);
  }

  // Designated co-hosting benign domains queue (attached when campaign IPs appear).
  Rng rng_cohost = util::make_rng(spec.rng_seed, "cohost");
  std::vector<size_t> cohost_queue;
  {
    size_t want = static_cast<size_t>(spec.shared_hosting_frac * spec.n_benign);
    std::vector<size_t> idx(static_cast<size_t>(spec.n_benign));  // plain benign only, no edu/gov
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng_cohost);
    cohost_queue.assign(idx.begin(), idx.begin() + std::min(want, idx.size()));
  }
  size_t cohost_next = 0;
  auto attach_cohosts = [&](const std::string& campaign_ip, int day) {
    int n = uniform01(rng_cohost) < 0.65 ? 1 : 2;
    for (int i = 0; i < n && cohost_next < cohost_queue.size(); ++i) {
      const auto& b = benign[cohost_queue[cohost_next++]];
      int64_t tf = w.day_ts(day, 7200 + static_cast<int64_t>(uniform_below(rng_cohost, 7200)));
      int64_t tl = std::min(world_end,
                            tf + (7 + static_cast<int64_t>(uniform_below(rng_cohost, 14))) * kSecondsPerDay);
      w.add_record(b.name, RrType::A, campaign_ip, tf, tl,
                   10 + static_cast<int64_t>(uniform_below(rng_cohost, 120)));
    }
  };

  // ---------- campaigns ----------
  Rng rng_detect = util::make_rng(spec.rng_seed, "detect");
  int campaign_index = 0;
  for (const auto& c : spec.campaigns) {
    Rng rng_c = util::make_rng(spec.rng_seed, "campaign:" + c.campaign_id);
    IpAllocator alloc(ip_base(45, 100 + campaign_index), 60);
    std::vector<std::string> campaign_asns;
    for (int i = 0; i < 3; ++i)
      campaign_asns.push_back("AS" + std::to_string(66000 + campaign_index * 3 + i));
    auto register_subnet = [&](const std::string& ip) {
      auto subnet = util::subnet24_key(ip);
      if (!w.asn_of_subnet.count(subnet) && uniform01(rng_c) >= 0.03)
        w.asn_of_subnet[subnet] = campaign_asns[util::fnv1a64(subnet) % campaign_asns.size()];
    };

    std::vector<std::string> initial = c.ip_pool;
    while (initial.size() < 8) initial.push_back(alloc.allocate());
    for (const auto& ip : initial) register_subnet(ip);

    // day_sets[d] = IPs assigned to domains newly hosted on day d.
    std::vector<std::vector<std::string>> day_sets(spec.days);
    std::vector<std::string> prev = initial;  // treated as day -1 for reuse purposes
    int created = 0;

    for (int d = 0; d < spec.days && created < c.n_domains; ++d) {
      int k_new = std::min(c.daily_new_domains, c.n_domains - created);

      std::set<std::string> prior7, continuing;
      for (int back = 1; back <= 7; ++back) {
        int pd = d - back;
        if (pd >= 0) prior7.insert(day_sets[pd].begin(), day_sets[pd].end());
        else if (pd == -1) prior7.insert(prev.begin(), prev.end());
      }
      for (int back = 1; back < c.lifetime_days; ++back) {
        int pd = d - back;
        if (pd >= 0) continuing.insert(day_sets[pd].begin(), day_sets[pd].end());
      }

      std::vector<std::string> pool_today;
      if (c.ip_reuse_prob <= 0.001) {
        for (int i = 0; i < std::max(2, k_new); ++i) pool_today.push_back(alloc.allocate());
      } else {
        // Reused picks from the prior-7-day pool, then enough fresh IPs so
        // the measured fresh fraction matches 1 - ip_reuse_prob.
        std::vector<std::string> prior_sorted(prior7.begin(), prior7.end());
        int n_reuse = std::min<int>(static_cast<int>(prior_sorted.size()), 4);
        std::set<std::string> reused;
        for (int i = 0; i < n_reuse && !prior_sorted.empty(); ++i) {
          size_t at = uniform_below(rng_c, prior_sorted.size());
          reused.insert(prior_sorted[at]);
          prior_sorted.erase(prior_sorted.begin() + static_cast<long>(at));
        }
        std::set<std::string> hosting_union = continuing;
        hosting_union.insert(reused.begin(), reused.end());
        double r = c.ip_reuse_prob;
        int fresh = r >= 0.999 ? 0
                               : static_cast<int>(std::llround((1.0 - r) / r *
                                                               static_cast<double>(hosting_union.size())));
        pool_today.assign(reused.begin(), reused.end());
        for (int i = 0; i < fresh; ++i) pool_today.push_back(alloc.allocate());
        if (pool_today.empty()) pool_today.push_back(initial[uniform_below(rng_c, initial.size())]);
      }
      for (const auto& ip : pool_today) {
        register_subnet(ip);
        bool fresh_ip = prior7.count(ip) == 0 && continuing.count(ip) == 0;
        if (fresh_ip && uniform01(rng_cohost) < 0.8) attach_cohosts(ip, d);
      }
      std::sort(pool_today.begin(), pool_today.end());
      day_sets[d] = pool_today;

      size_t slot = 0;
      for (int j = 0; j < k_new; ++j, ++created) {
        std::string name = campaign_name(w, c.name_style, rng_c);
        bool aged = d >= 4 && uniform01(rng_c) < c.aged_frac;
        int n_ips = 1 + (uniform01(rng_c) < 0.5 ? 1 : 0);

        int last_day = std::min(spec.days - 1, d + c.lifetime_days - 1);
        int64_t tf = w.day_ts(d, 600 + static_cast<int64_t>(uniform_below(rng_c, 6 * 3600)));
        int64_t tl = std::min(world_end,
                              w.day_ts(last_day, 12 * 3600 + static_cast<int64_t>(uniform_below(rng_c, 11 * 3600))));
        int64_t count = aged ? 20 + static_cast<int64_t>(uniform_below(rng_c, 180))
                             : 1 + static_cast<int64_t>(uniform_below(rng_c, 29));

        for (int ipn = 0; ipn < n_ips; ++ipn) {
          const std::string& ip = pool_today[slot++ % pool_today.size()];
          w.add_record(name, RrType::A, ip, tf, tl, std::max<int64_t>(1, count / n_ips));
        }
        if (aged) {
          int age_days = 7 + static_cast<int>(uniform_below(rng_c, 15));
          int park_start = std::max(0, d - age_days);
          int64_t ptf = w.day_ts(park_start, 3600);
          int64_t ptl = tf - 1800;
          if (ptl > ptf) {
            w.add_record(name, RrType::A, parking_ips[uniform_below(rng_c, parking_ips.size())],
                         ptf, ptl, 3 + static_cast<int64_t>(uniform_below(rng_c, 40)));
          }
        }
        if (uniform01(rng_c) < 0.8) {
          const std::string& reg = uniform01(rng_c) < 0.02 ? name : w.pick(w.registrars.cheap, rng_c);
          w.add_record(name, RrType::NS, "ns1." + reg, tf, tl, 1 + uniform_below(rng_c, 5));
          if (uniform01(rng_c) < 0.3)
            w.add_record(name, RrType::SOA, "ns1." + reg, tf, tl, 1 + uniform_below(rng_c, 3));
        }
        w.labels.emplace_back(name, "malicious");
        // Scanner verdicts.
        if (uniform01(rng_detect) < spec.detect_prob) {
          int fs_day = d + spec.detection_delay_days;
          int64_t fs = w.day_ts(fs_day, 1800 + static_cast<int64_t>(uniform_below(rng_detect, 80000)));
          int positives = 5 + static_cast<int>(uniform_below(rng_detect, 4)) +
                          static_cast<int>(uniform_below(rng_detect, 8));
          w.feed.push_back({name, fs, positives, 90});
          if (uniform01(rng_detect) < spec.sinkhole_frac) {
            int64_t stf = fs + 3600;
            int64_t stl = std::min(world_end, stf + 30 * kSecondsPerDay);
            if (stl > stf)
              w.add_record(name, RrType::A, w.sinkhole_ips[uniform_below(rng_detect, w.sinkhole_ips.size())],
                           stf, stl, 1 + uniform_below(rng_detect, 5));
          }
        } else if (uniform01(rng_detect) < spec.subthreshold_prob) {
          int64_t fs = w.day_ts(d + spec.detection_delay_days,
                                1800 + static_cast<int64_t>(uniform_below(rng_detect, 80000)));
          w.feed.push_back({name, fs, 1 + static_cast<int>(uniform_below(rng_detect, 4)), 90});
        }
      }
    }
    ++campaign_index;
  }

  // Sinkhole-only exerciser domains: attack infrastructure long gone, only the
  // sinkhole record remains inside recent windows while the flag is fresh.
  if (!spec.campaigns.empty() && spec.days >= 14) {
    Rng rng_s = util::make_rng(spec.rng_seed, "sinkhole_only");
    for (int i = 0; i < 12; ++i) {
      std::string name = campaign_name(w, NameStyle::brand_squat, rng_s);
      int flag_day = 10 + static_cast<int>(uniform_below(rng_s, spec.days - 12));
      int host_day = std::max(0, flag_day - 9 - static_cast<int>(uniform_below(rng_s, 4)));
      int64_t tf = w.day_ts(host_day, 3600);
      int64_t tl = w.day_ts(host_day, 80000);
      w.add_record(name, RrType::A, "45.90.90." + std::to_string(10 + i), tf, tl,
                   1 + uniform_below(rng_s, 9));
      int64_t stf = w.day_ts(flag_day - 6, 3600);
      w.add_record(name, RrType::A, w.sinkhole_ips[uniform_below(rng_s, w.sinkhole_ips.size())],
                   stf, std::min(world_end, stf + 40 * kSecondsPerDay), 2);
      int64_t fs = w.day_ts(flag_day, 7200 + static_cast<int64_t>(uniform_below(rng_s, 40000)));
      w.feed.push_back({name, fs, 6 + static_cast<int>(uniform_below(rng_s, 6)), 90});
      w.labels.emplace_back(name, "malicious");
    }
    w.asn_of_subnet["45.90.90.0/24"] = "AS66999";
  }

  // ---------- top lists ----------
  {
    std::vector<size_t> order(benign.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (benign[a].total_count != benign[b].total_count)
        return benign[a].total_count > benign[b].total_count;
      return benign[a].name < benign[b].name;
    });
    size_t stable = std::min<size_t>(spec.toplist_size, order.size());
    size_t churn_pool = std::min<size_t>(stable + 800, order.size());
    for (const auto& source : corpus.toplist_sources) {
      for (int d = 0; d < spec.days; ++d) {
        std::string date = util::add_days(spec.start_date, d);
        std::string body;
        size_t rank = 1;
        for (size_t i = 0; i < stable; ++i, ++rank)
          body += std::to_string(rank) + "," + benign[order[i]].name + "\n";
        // Tail churn: deterministic per (source, day) selection below the stable cut.
        Rng rng_t = util::make_rng(spec.rng_seed, "toplist:" + source + ":" + date);
        std::vector<size_t> tail(order.begin() + static_cast<long>(stable),
                                 order.begin() + static_cast<long>(churn_pool));
        std::shuffle(tail.begin(), tail.end(), rng_t);
        for (size_t i = 0; i < tail.size() && i < 400; ++i, ++rank)
          body += std::to_string(rank) + "," + benign[tail[i]].name + "\n";
        util::write_file(corpus.toplist_file(source, date), body);
      }
    }
  }

  // ---------- canonicalize and write ----------
  std::sort(w.records.begin(), w.records.end(), [](const DnsRecord& a, const DnsRecord& b) {
    return std::tie(a.rrname, a.rrtype, a.rdata, a.time_first) <
           std::tie(b.rrname, b.rrtype, b.rdata, b.time_first);
  });
  {
    std::string body;
    body.reserve(w.records.size() * 120);
    for (const auto& r : w.records) {
      body += pdns::record_to_json_line(r);
      body += "\n";
    }
    util::write_file(corpus.pdns_file, body);
  }
  {
    std::sort(w.feed.begin(), w.feed.end(), [](const FeedRow& a, const FeedRow& b) {
      return std::tie(a.first_seen, a.domain) < std::tie(b.first_seen, b.domain);
    });
    std::string body;
    for (const auto& f : w.feed)
      body += f.domain + "," + std::to_string(f.first_seen) + "," + std::to_string(f.positives) +
              "," + std::to_string(f.total) + "\n";
    util::write_file(corpus.feed_file, body);
  }
  {
    std::sort(w.labels.begin(), w.labels.end());
    std::string body;
    for (const auto& [d, l] : w.labels) body += d + "," + l + "\n";
    util::write_file(corpus.labels_file, body);
  }
  {
    std::string body;
    for (const auto& ip : w.sinkhole_ips) body += ip + "\n";
    util::write_file(corpus.sinkholes_file, body);
  }
  {
    std::string body;
    for (const auto& [subnet, asn] : w.asn_of_subnet) body += subnet + "," + asn + "\n";
    util::write_file(corpus.asn_map_file, body);
  }
  {
    nlohmann::ordered_json j;
    j["spec"] = nlohmann::ordered_json::parse(spec.to_json());
    j["records"] = w.records.size();
    j["feed_entries"] = w.feed.size();
    j["domains"] = w.labels.size();
    util::write_file(corpus.world_file, j.dump(2) + "\n");
  }

  corpus.n_records = static_cast<int64_t>(w.records.size());
  for (const auto& [d, l] : w.labels) (l == "malicious" ? corpus.n_malicious : corpus.n_benign)++;
  return corpus;
}

namespace {

std::set<std::string> malicious_from_labels(const std::string& labels_file) {
  std::set<std::string> out;
  for (const auto& line : util::read_lines(labels_file)) {
    if (line.empty()) continue;
    auto comma = line.rfind(',');
    if (comma == std::string::npos) continue;
    if (line.substr(comma + 1) == "malicious") out.insert(line.substr(0, comma));
  }
  return out;
}

}  // namespace

double measure_reuse(const std::string& pdns_file, const std::string& labels_file,
                     const std::string& sinkholes_file, const std::string& day) {
  pdns::Store store;
  store.ingest_file(pdns_file);
  store.finalize();
  auto malicious = malicious_from_labels(labels_file);
  std::set<std::string> sinkholes;
  for (const auto& ip : util::read_list_file(sinkholes_file)) sinkholes.insert(ip);

  int64_t day_s = util::day_start(day);
  int64_t earliest = INT64_MAX;
  for (const auto& r : store.records()) earliest = std::min(earliest, r.time_first);
  if (earliest == INT64_MAX || day_s - earliest < 7 * kSecondsPerDay)
    throw std::runtime_error("measure_reuse requires at least 8 days of history before " + day);

  pdns::TimeWindow current(day_s, day_s + kSecondsPerDay);
  pdns::TimeWindow prior(day_s - 7 * kSecondsPerDay, day_s);
  std::set<std::string> cur_ips, prior_ips;
  for (const auto& name : malicious) {
    for (const auto& r : store.resolutions(name, current))
      if (!sinkholes.count(r.ip)) cur_ips.insert(r.ip);
    for (const auto& r : store.resolutions(name, prior))
      if (!sinkholes.count(r.ip)) prior_ips.insert(r.ip);
  }
  if (cur_ips.empty())
    throw std::runtime_error("no malicious hosting observed on " + day);
  int64_t reused = 0;
  for (const auto& ip : cur_ips) reused += prior_ips.count(ip);
  return static_cast<double>(reused) / static_cast<double>(cur_ips.size());
}

double measure_toxicity(const std::string& pdns_file, const std::string& feed_file,
                        const std::string& sinkholes_file, const std::string& day, int threshold) {
  pdns::Store store;
  store.ingest_file(pdns_file);
  store.finalize();
  auto feed = intel::Feed::load(feed_file);
  std::set<std::string> sinkholes;
  for (const auto& ip : util::read_list_file(sinkholes_file)) sinkholes.insert(ip);

  int64_t day_s = util::day_start(day);
  pdns::TimeWindow current(day_s, day_s + kSecondsPerDay);
  std::set<std::string> active;
  for (const auto& r : store.records()) {
    if (r.rrtype == RrType::A && current.intersects(r) && !sinkholes.count(r.rdata))
      active.insert(r.rrname);
  }
  if (active.empty()) return 0.0;
  int64_t flagged = 0;
  for (const auto& name : active) {
    const auto* e = feed.find(name);
    if (e && e->first_seen < day_s + kSecondsPerDay && e->positives >= threshold) ++flagged;
  }
  return static_cast<double>(flagged) / static_cast<double>(active.size());
}

}  // namespace mantis::synth
