#include <doctest.h>

#include <filesystem>

#include "mantis/intel/feeds.hpp"
#include "mantis/pdns/store.hpp"
#include "mantis/synth/generator.hpp"
#include "mantis/util/dates.hpp"
#include "mantis/util/io.hpp"

using namespace mantis;
using namespace mantis::synth;

namespace {

std::string temp_dir(const std::string& tag) {
  auto path = std::filesystem::temp_directory_path() / ("mantis_synth_" + tag);
  std::filesystem::remove_all(path);
  return path.string();
}

}  // namespace

TEST_CASE("inconsistent specs are rejected") {
  WorldSpec spec = WorldSpec::tiny();
  spec.campaigns[0].daily_new_domains = spec.campaigns[0].n_domains + 1;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec = WorldSpec::tiny();
  spec.campaigns[0].ip_reuse_prob = 1.5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec = WorldSpec::tiny();
  spec.days = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec = WorldSpec::tiny();
  spec.campaigns[1].campaign_id = spec.campaigns[0].campaign_id;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("same spec and seed produce byte-identical corpora") {
  WorldSpec spec = WorldSpec::tiny(7);
  spec.n_benign = 600;
  spec.toplist_size = 100;
  auto a = generate(spec, temp_dir("det_a"));
  auto b = generate(spec, temp_dir("det_b"));
  CHECK(util::read_file(a.pdns_file) == util::read_file(b.pdns_file));
  CHECK(util::read_file(a.feed_file) == util::read_file(b.feed_file));
  CHECK(util::read_file(a.labels_file) == util::read_file(b.labels_file));
  CHECK(util::read_file(a.asn_map_file) == util::read_file(b.asn_map_file));
  std::string day = util::add_days(spec.start_date, 3);
  CHECK(util::read_file(a.toplist_file("toplist_a", day)) ==
        util::read_file(b.toplist_file("toplist_a", day)));

  // Different seed changes the world.
  spec.rng_seed = 8;
  auto c = generate(spec, temp_dir("det_c"));
  CHECK(util::read_file(a.pdns_file) != util::read_file(c.pdns_file));
}

TEST_CASE("zero campaigns means empty feed and all-benign labels") {
  WorldSpec spec;
  spec.days = 5;
  spec.n_benign = 80;
  spec.n_edu_gov = 5;
  spec.toplist_size = 20;
  auto corpus = generate(spec, temp_dir("nocamp"));
  CHECK(util::read_file(corpus.feed_file).empty());
  for (const auto& line : util::read_lines(corpus.labels_file)) {
    if (line.empty()) continue;
    CHECK(line.substr(line.rfind(',') + 1) == "benign");
  }
  CHECK(corpus.n_malicious == 0);
}

TEST_CASE("hosting precedes detection for every flagged malicious domain") {
  WorldSpec spec = WorldSpec::tiny(3);
  spec.n_benign = 400;
  auto corpus = generate(spec, temp_dir("hostfirst"));

  pdns::Store store;
  store.ingest_file(corpus.pdns_file);
  store.finalize();
  auto feed = intel::Feed::load(corpus.feed_file);

  int checked = 0;
  for (const auto& line : util::read_lines(corpus.labels_file)) {
    if (line.empty() || line.substr(line.rfind(',') + 1) != "malicious") continue;
    std::string domain = line.substr(0, line.rfind(','));
    const auto* entry = feed.find(domain);
    if (!entry || entry->positives < 5) continue;
    int64_t min_tf = INT64_MAX;
    for (const auto* r : store.records_for(domain, pdns::TimeWindow::all()))
      if (r->rrtype == pdns::RrType::A) min_tf = std::min(min_tf, r->time_first);
    REQUIRE(min_tf != INT64_MAX);
    CHECK(min_tf < entry->first_seen);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("static single-ip campaign measures full reuse") {
  WorldSpec spec;
  spec.days = 12;
  spec.n_benign = 60;
  spec.n_edu_gov = 0;
  spec.toplist_size = 10;
  spec.shared_hosting_frac = 0.0;
  spec.sinkhole_frac = 0.0;
  CampaignSpec c;
  c.campaign_id = "static";
  c.n_domains = 60;
  c.daily_new_domains = 5;
  c.ip_reuse_prob = 1.0;
  c.ip_pool = {"45.200.0.1"};
  c.lifetime_days = 2;
  c.aged_frac = 0.0;
  spec.campaigns = {c};
  auto corpus = generate(spec, temp_dir("static_ip"));
  double reuse = measure_reuse(corpus.pdns_file, corpus.labels_file, corpus.sinkholes_file,
                               util::add_days(spec.start_date, 9));
  CHECK(reuse == doctest::Approx(1.0));
}

TEST_CASE("fresh-ips-every-day campaign measures zero reuse") {
  WorldSpec spec;
  spec.days = 12;
  spec.n_benign = 60;
  spec.n_edu_gov = 0;
  spec.toplist_size = 10;
  spec.shared_hosting_frac = 0.0;
  spec.sinkhole_frac = 0.0;
  CampaignSpec c;
  c.campaign_id = "fresh";
  c.n_domains = 60;
  c.daily_new_domains = 5;
  c.ip_reuse_prob = 0.0;
  c.lifetime_days = 1;  // single-day bursts so spans never straddle days
  c.aged_frac = 0.0;
  spec.campaigns = {c};
  auto corpus = generate(spec, temp_dir("fresh_ip"));
  double reuse = measure_reuse(corpus.pdns_file, corpus.labels_file, corpus.sinkholes_file,
                               util::add_days(spec.start_date, 9));
  CHECK(reuse == doctest::Approx(0.0));
}

TEST_CASE("measure_reuse demands at least 8 days of history") {
  WorldSpec spec = WorldSpec::tiny(5);
  spec.n_benign = 200;
  auto corpus = generate(spec, temp_dir("history"));
  CHECK_THROWS(measure_reuse(corpus.pdns_file, corpus.labels_file, corpus.sinkholes_file,
                             util::add_days(spec.start_date, 3)));
}

TEST_CASE("tiny world reuse lands near the configured probability") {
  WorldSpec spec = WorldSpec::tiny(11);
  auto corpus = generate(spec, temp_dir("reuse_tiny"));
  double reuse = measure_reuse(corpus.pdns_file, corpus.labels_file, corpus.sinkholes_file,
                               util::add_days(spec.start_date, 11));
  CHECK(reuse > 0.70);
  CHECK(reuse < 0.90);
}

TEST_CASE("world json round trip") {
  WorldSpec spec = WorldSpec::defaults();
  auto text = spec.to_json();
  WorldSpec back = WorldSpec::from_json(text);
  CHECK(back.days == spec.days);
  CHECK(back.n_benign == spec.n_benign);
  REQUIRE(back.campaigns.size() == spec.campaigns.size());
  CHECK(back.campaigns[5].name_style == NameStyle::random_token);
  CHECK(back.campaigns[5].aged_frac == doctest::Approx(0.8));
}
