#include <doctest.h>

#include "mantis/util/config.hpp"
#include "mantis/util/dates.hpp"
#include "mantis/util/domain.hpp"
#include "mantis/util/hashing.hpp"
#include "mantis/util/metrics.hpp"
#include "mantis/util/wordlists.hpp"

using namespace mantis::util;

TEST_CASE("domain name validation") {
  CHECK(is_valid_domain_name("example.com"));
  CHECK(is_valid_domain_name("a.b.example.co.uk"));
  CHECK(is_valid_domain_name("xn--podbitka-chem-7hc.pl"));
  CHECK_FALSE(is_valid_domain_name(""));
  CHECK_FALSE(is_valid_domain_name(".com"));
  CHECK_FALSE(is_valid_domain_name("bad..name"));
  CHECK_FALSE(is_valid_domain_name("-leading.com"));
  CHECK_FALSE(is_valid_domain_name("trailing-.com"));
  CHECK_FALSE(is_valid_domain_name(std::string(64, 'a') + ".com"));
  CHECK_FALSE(is_valid_domain_name("has space.com"));
}

TEST_CASE("canonical domain") {
  CHECK(canonical_domain("ExAmple.COM.") == "example.com");
  CHECK(canonical_domain("already.lower") == "already.lower");
}

TEST_CASE("ipv4 parsing") {
  CHECK(parse_ipv4("1.2.3.4").has_value());
  CHECK(format_ipv4(*parse_ipv4("203.0.113.77")) == "203.0.113.77");
  CHECK_FALSE(parse_ipv4("1.2.3").has_value());
  CHECK_FALSE(parse_ipv4("1.2.3.256").has_value());
  CHECK_FALSE(parse_ipv4("a.b.c.d").has_value());
  CHECK(subnet24_key("203.0.113.77") == "203.0.113.0/24");
}

TEST_CASE("public suffix apex extraction") {
  const auto& psl = PublicSuffixList::bundled();
  CHECK(psl.apex("example.com") == "example.com");
  CHECK(psl.apex("a.b.example.com") == "example.com");
  CHECK(psl.apex("example.co.uk") == "example.co.uk");
  CHECK(psl.apex("www.example.co.uk") == "example.co.uk");
  CHECK(psl.tld("www.example.co.uk") == "co.uk");
  CHECK(psl.tld("example.xyz") == "xyz");
  CHECK(psl.is_public_suffix("com"));
  CHECK_FALSE(psl.is_public_suffix("example.com"));
}

TEST_CASE("dates round trip") {
  CHECK(day_start("1970-01-01") == 0);
  CHECK(day_start("2022-07-01") == 1656633600);
  CHECK(date_of(1656633600) == "2022-07-01");
  CHECK(date_of(1656633600 + 86399) == "2022-07-01");
  CHECK(add_days("2022-07-01", 7) == "2022-07-08");
  CHECK(add_days("2022-07-01", -1) == "2022-06-30");
  CHECK_THROWS(day_start("2022-7-1"));
}

TEST_CASE("sha256 known vector") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("auc basic properties") {
  // Perfect separation.
  CHECK(auc({0.1, 0.2, 0.8, 0.9}, {0, 0, 1, 1}) == doctest::Approx(1.0));
  // Inverted.
  CHECK(auc({0.9, 0.8, 0.2, 0.1}, {0, 0, 1, 1}) == doctest::Approx(0.0));
  // All tied scores.
  CHECK(auc({0.5, 0.5, 0.5, 0.5}, {0, 0, 1, 1}) == doctest::Approx(0.5));
}

TEST_CASE("confusion at threshold") {
  auto m = confusion_at({0.9, 0.4, 0.6, 0.1}, {1, 1, 0, 0}, 0.5);
  CHECK(m.tp == 1);
  CHECK(m.fn == 1);
  CHECK(m.fp == 1);
  CHECK(m.tn == 1);
  CHECK(m.accuracy() == doctest::Approx(0.5));
}

TEST_CASE("config env override") {
  Config cfg(nlohmann::json{{"train", {{"epochs", 7}}}});
  CHECK(cfg.get<int>("train.epochs", 0) == 7);
  CHECK(cfg.get<int>("train.missing", 42) == 42);
  setenv("MANTIS_TRAIN_EPOCHS", "11", 1);
  CHECK(cfg.get<int>("train.epochs", 0) == 11);
  unsetenv("MANTIS_TRAIN_EPOCHS");
}

TEST_CASE("bundled wordlists load") {
  const auto& w = Wordlists::bundled();
  CHECK(w.brands.size() >= 50);
  CHECK(w.dictionary.size() >= 300);
  CHECK(w.suspicious_tlds.count("tk") == 1);
  CHECK(w.reputable_tlds.count("edu") == 1);
}
