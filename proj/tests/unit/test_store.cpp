#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>
#include <thread>

#include "mantis/pdns/store.hpp"
#include "mantis/util/rng.hpp"

using namespace mantis::pdns;

namespace {

DnsRecord rec(const std::string& name, RrType t, const std::string& rdata, int64_t tf, int64_t tl,
              int64_t count = 1) {
  return DnsRecord{name, t, rdata, tf, tl, count};
}

std::string line(const std::string& name, const std::string& type, const std::string& rdata,
                 int64_t tf, int64_t tl, int64_t count) {
  return "{\"rrname\":\"" + name + "\",\"rrtype\":\"" + type + "\",\"rdata\":\"" + rdata +
         "\",\"time_first\":" + std::to_string(tf) + ",\"time_last\":" + std::to_string(tl) +
         ",\"count\":" + std::to_string(count) + "}";
}

}  // namespace

TEST_CASE("ndjson parse round trip") {
  auto parsed = parse_record_line(line("D.com", "A", "1.2.3.4", 100, 200, 3));
  REQUIRE(parsed.record.has_value());
  CHECK(parsed.record->rrname == "d.com");  // canonicalized
  CHECK(parsed.record->rrtype == RrType::A);
  CHECK(record_to_json_line(*parsed.record) == line("d.com", "A", "1.2.3.4", 100, 200, 3));

  // Whitespace variants go through the fallback parser.
  auto spaced = parse_record_line(
      R"({ "rrname": "x.com" , "rrtype": "NS", "rdata": "ns1.host.com", "time_first": 1, "time_last": 2, "count": 5 })");
  REQUIRE(spaced.record.has_value());
  CHECK(spaced.record->rrtype == RrType::NS);
}

TEST_CASE("ingest merges duplicates additively") {
  Store store;
  std::istringstream in(line("d.com", "A", "1.2.3.4", 100, 150, 3) + "\n" +
                        line("d.com", "A", "1.2.3.4", 120, 200, 5) + "\n");
  CHECK(store.ingest_stream(in) == 2);
  store.finalize();
  REQUIRE(store.record_count() == 1);
  const auto& r = store.records()[0];
  CHECK(r.time_first == 100);
  CHECK(r.time_last == 200);
  CHECK(r.count == 8);
}

TEST_CASE("empty stream ingests zero records") {
  Store store;
  std::istringstream in("");
  CHECK(store.ingest_stream(in) == 0);
}

TEST_CASE("invalid records are rejected per record, rest kept") {
  Store store;
  IngestReport report;
  std::istringstream in(line("good.com", "A", "1.2.3.4", 100, 200, 1) + "\n" +
                        line("bad.com", "A", "1.2.3.4", 300, 200, 1) + "\n" +  // tf > tl
                        line("worse.com", "A", "not-an-ip", 1, 2, 1) + "\n" +
                        "{garbage\n" +
                        line("ok.net", "NS", "ns1.ok.net", 1, 2, 1) + "\n");
  CHECK(store.ingest_stream(in, &report) == 2);
  CHECK(report.rejected == 3);
  REQUIRE(report.rejections.size() == 3);
  CHECK(report.rejections[0].second == "time_first > time_last");
  store.finalize();
  CHECK(store.record_count() == 2);
}

TEST_CASE("resolutions sorted by time_last descending") {
  Store store;
  store.add(rec("d.com", RrType::A, "1.1.1.1", 50, 100));
  store.add(rec("d.com", RrType::A, "2.2.2.2", 50, 200));
  store.add(rec("d.com", RrType::NS, "ns.d.com", 0, 500));
  store.finalize();
  auto res = store.resolutions("d.com", TimeWindow(0, 1000));
  REQUIRE(res.size() == 2);
  CHECK(res[0].ip == "2.2.2.2");
  CHECK(res[0].time_last == 200);
  CHECK(res[1].ip == "1.1.1.1");

  CHECK(store.resolutions("unknown.com", TimeWindow(0, 1000)).empty());
  // Window intersection, not containment: [50,100] and [50,200] both intersect [90, 95).
  CHECK(store.resolutions("d.com", TimeWindow(90, 95)).size() == 2);
  CHECK(store.resolutions("d.com", TimeWindow(201, 300)).empty());
}

TEST_CASE("resolutions window edge semantics") {
  Store store;
  store.add(rec("d.com", RrType::A, "1.1.1.1", 100, 200));
  store.finalize();
  CHECK(store.resolutions("d.com", TimeWindow(200, 300)).size() == 1);  // tl == start included
  CHECK(store.resolutions("d.com", TimeWindow(201, 300)).empty());
  CHECK(store.resolutions("d.com", TimeWindow(0, 100)).empty());        // end exclusive
  CHECK(store.resolutions("d.com", TimeWindow(0, 101)).size() == 1);
}

TEST_CASE("recent_domains ranking, ties and limit") {
  Store store;
  store.add(rec("zzz.com", RrType::A, "9.9.9.9", 0, 100));
  store.add(rec("aaa.com", RrType::A, "9.9.9.9", 0, 100));  // tie on time_last
  store.add(rec("newer.com", RrType::A, "9.9.9.9", 0, 300));
  store.finalize();
  auto top = store.recent_domains("9.9.9.9", TimeWindow(0, 1000), 10);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == "newer.com");
  CHECK(top[1] == "aaa.com");  // lexicographically smaller first on tie
  CHECK(top[2] == "zzz.com");

  CHECK(store.recent_domains("9.9.9.9", TimeWindow(0, 1000), 2).size() == 2);
  CHECK(store.recent_domains("8.8.8.8", TimeWindow(0, 1000), 5).empty());
  CHECK_THROWS(store.recent_domains("9.9.9.9", TimeWindow(0, 1000), 0));
}

TEST_CASE("recent_domains caps at limit with many domains") {
  Store store;
  for (int i = 0; i < 300; ++i) {
    store.add(rec("d" + std::to_string(i) + ".com", RrType::A, "7.7.7.7", 0, 1000 + i));
  }
  store.finalize();
  auto top = store.recent_domains("7.7.7.7", TimeWindow(0, 10000), 200);
  REQUIRE(top.size() == 200);
  CHECK(top[0] == "d299.com");  // most recent first
}

TEST_CASE("recent_domains prefix property") {
  Store store;
  mantis::util::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    store.add(rec("p" + std::to_string(i) + ".com", RrType::A, "5.5.5.5", 0,
                  static_cast<int64_t>(mantis::util::uniform_below(rng, 40))));
  }
  store.finalize();
  auto w = TimeWindow(0, 100);
  for (int n = 1; n < 50; n += 7) {
    auto a = store.recent_domains("5.5.5.5", w, n);
    auto b = store.recent_domains("5.5.5.5", w, n + 13);
    REQUIRE(a.size() <= b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("resolutions and recent_domains are mutually consistent") {
  Store store;
  mantis::util::Rng rng(99);
  for (int i = 0; i < 120; ++i) {
    std::string d = "c" + std::to_string(mantis::util::uniform_below(rng, 30)) + ".net";
    std::string ip = "10.0." + std::to_string(mantis::util::uniform_below(rng, 5)) + "." +
                     std::to_string(mantis::util::uniform_below(rng, 6));
    int64_t tf = static_cast<int64_t>(mantis::util::uniform_below(rng, 500));
    store.add(rec(d, RrType::A, ip, tf, tf + static_cast<int64_t>(mantis::util::uniform_below(rng, 100))));
  }
  store.finalize();
  auto w = TimeWindow::all();
  std::set<std::string> all_ips, all_domains;
  for (const auto& r : store.records()) {
    all_ips.insert(r.rdata);
    all_domains.insert(r.rrname);
  }
  for (const auto& ip : all_ips) {
    for (const auto& d : store.recent_domains(ip, w, 1000)) {
      auto res = store.resolutions(d, w);
      bool found = false;
      for (const auto& r : res) found |= (r.ip == ip);
      CHECK(found);
    }
  }
  for (const auto& d : all_domains) {
    for (const auto& r : store.resolutions(d, w)) {
      auto doms = store.recent_domains(r.ip, w, 1000);
      CHECK(std::find(doms.begin(), doms.end(), d) != doms.end());
    }
  }
}

TEST_CASE("hosting stats aggregates and absent marker") {
  Store store;
  store.add(rec("d.com", RrType::A, "1.1.1.1", 0, 2 * 86400, 7));
  store.add(rec("d.com", RrType::NS, "ns1.d.com", 0, 86400, 2));
  store.finalize();

  auto s = store.hosting_stats("d.com", TimeWindow(0, 10 * 86400));
  CHECK(s.present);
  CHECK(s.query_count == 9);
  CHECK(s.duration_days == doctest::Approx(2.0));
  CHECK(s.distinct_counterparties == 1);
  CHECK(s.ns_count == 1);

  auto absent = store.hosting_stats("unknown.com", TimeWindow(0, 10 * 86400));
  CHECK_FALSE(absent.present);

  auto ip_stats = store.hosting_stats("1.1.1.1", TimeWindow(0, 10 * 86400));
  CHECK(ip_stats.present);
  CHECK(ip_stats.query_count == 7);
  CHECK(ip_stats.distinct_counterparties == 1);
}

TEST_CASE("hosting stats only aggregates window-intersecting records") {
  Store store;
  store.add(rec("d.com", RrType::A, "1.1.1.1", 0, 100, 5));
  store.add(rec("d.com", RrType::A, "2.2.2.2", 5000, 6000, 11));
  store.finalize();

  // Brute-force oracle over the raw record list.
  TimeWindow w(0, 1000);
  int64_t expect_count = 0;
  for (const auto& r : store.records())
    if (w.intersects(r)) expect_count += r.count;
  auto s = store.hosting_stats("d.com", w);
  CHECK(s.query_count == expect_count);
  CHECK(s.distinct_counterparties == 1);
}

TEST_CASE("re-ingesting the same file doubles counts but keeps results otherwise identical") {
  std::string body = line("d.com", "A", "1.2.3.4", 100, 200, 3) + "\n" +
                     line("e.com", "A", "1.2.3.4", 50, 90, 2) + "\n";
  Store once, twice;
  {
    std::istringstream a(body);
    once.ingest_stream(a);
    once.finalize();
  }
  {
    std::istringstream a(body), b(body);
    twice.ingest_stream(a);
    twice.ingest_stream(b);
    twice.finalize();
  }
  REQUIRE(once.record_count() == twice.record_count());
  auto w = TimeWindow::all();
  CHECK(once.recent_domains("1.2.3.4", w, 10) == twice.recent_domains("1.2.3.4", w, 10));
  for (size_t i = 0; i < once.record_count(); ++i) {
    CHECK(once.records()[i].time_first == twice.records()[i].time_first);
    CHECK(once.records()[i].time_last == twice.records()[i].time_last);
    CHECK(twice.records()[i].count == 2 * once.records()[i].count);
  }
}

TEST_CASE("store save/load round trip") {
  Store store;
  store.add(rec("d.com", RrType::A, "1.2.3.4", 100, 200, 3));
  store.add(rec("d.com", RrType::SOA, "ns1.d.com", 1, 2, 1));
  store.finalize();
  auto path = std::filesystem::temp_directory_path() / "mantis_store_test.bin";
  store.save(path.string());
  auto loaded = Store::load(path.string());
  REQUIRE(loaded.record_count() == 2);
  CHECK(loaded.resolutions("d.com", TimeWindow::all()).size() == 1);
  std::filesystem::remove(path);
}

TEST_CASE("concurrent reads after finalize") {
  Store store;
  for (int i = 0; i < 200; ++i)
    store.add(rec("t" + std::to_string(i % 20) + ".com", RrType::A,
                  "3.3.3." + std::to_string(i % 7), 0, i));
  store.finalize();
  std::vector<std::thread> threads;
  std::atomic<int> failures{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&store, &failures] {
      for (int i = 0; i < 50; ++i) {
        auto res = store.resolutions("t1.com", TimeWindow::all());
        if (res.empty()) failures.fetch_add(1);
        auto doms = store.recent_domains("3.3.3.1", TimeWindow::all(), 5);
        if (doms.empty()) failures.fetch_add(1);
      }
    });
  }
  for (auto& t : threads) t.join();
  CHECK(failures.load() == 0);
}
