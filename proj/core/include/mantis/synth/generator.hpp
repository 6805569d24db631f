#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mantis::synth {

enum class NameStyle { brand_squat, random_token, dga_like };

const char* name_style_str(NameStyle s);
NameStyle name_style_from(const std::string& s);

struct CampaignSpec {
  std::string campaign_id;
  int n_domains = 300;
  std::vector<std::string> ip_pool;  // initial pool; the generator allocates more as needed
  int daily_new_domains = 10;
  double ip_reuse_prob = 0.8;
  NameStyle name_style = NameStyle::brand_squat;
  int lifetime_days = 3;
  // Fraction of domains parked in PDNS well before their hosting day. Their
  // windowed hosting features end up benign-looking, so only the hosting
  // neighborhood separates them.
  double aged_frac = 0.15;
};

struct WorldSpec {
  std::string start_date = "2022-07-01";
  int days = 30;
  int n_benign = 46000;
  int n_edu_gov = 90;
  double shared_hosting_frac = 0.045;  // benign domains also resolving to campaign IPs
  uint64_t rng_seed = 1;
  std::vector<CampaignSpec> campaigns;

  // Scanner model: detected domains cross the 5-positive threshold
  // detection_delay_days after hosting; a share of the rest picks up 1-4
  // positives; the remainder is the scanners' blind spot.
  int detection_delay_days = 2;
  double detect_prob = 0.85;
  double subthreshold_prob = 0.7;
  double sinkhole_frac = 0.08;  // detected domains later pointed at sinkhole IPs

  int toplist_size = 3000;

  void validate() const;  // throws std::invalid_argument on inconsistent specs

  static WorldSpec defaults();       // the desk-scale benchmark world
  static WorldSpec tiny(uint64_t seed = 1);  // small world for fast tests

  std::string to_json() const;
  static WorldSpec from_json(const std::string& text);
};

struct Corpus {
  std::string dir;
  std::string pdns_file;
  std::string feed_file;
  std::string labels_file;
  std::string sinkholes_file;
  std::string asn_map_file;
  std::string world_file;
  std::vector<std::string> toplist_sources;
  // toplists/<source>_<date>.csv
  std::string toplist_file(const std::string& source, const std::string& date) const;

  int64_t n_records = 0;
  int64_t n_malicious = 0;
  int64_t n_benign = 0;

  static Corpus at(const std::string& dir);  // paths only, for consumers of existing output
};

// Deterministic: same spec (incl. rng_seed) -> byte-identical files.
Corpus generate(const WorldSpec& spec, const std::string& out_dir);

// Fraction of IPs hosting a malicious domain on `day` that also hosted any
// malicious domain in the prior 7 days. Sinkhole IPs are defender
// infrastructure and are excluded on both sides. Requires >= 8 days of data.
double measure_reuse(const std::string& pdns_file, const std::string& labels_file,
                     const std::string& sinkholes_file, const std::string& day);

// Day-sampled global toxicity: among domains with a non-sinkhole A record
// intersecting `day`, the fraction flagged with >= threshold positives by a
// feed entry first seen on or before `day`.
double measure_toxicity(const std::string& pdns_file, const std::string& feed_file,
                        const std::string& sinkholes_file, const std::string& day, int threshold);

}  // namespace mantis::synth
