#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "toptypes/error.hpp"
#include "toptypes/harness.hpp"

using namespace toptypes;

namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }

VerifyConfig config_for(const char* corpus, std::uint64_t d, std::uint64_t dmax) {
  VerifyConfig c;
  c.corpus = parse_corpus(corpus);
  c.guest_radius = d;
  c.max_host_radius = dmax;
  return c;
}

}  // namespace

TEST_CASE("parse_corpus") {
  auto c = parse_corpus("w, 2 1,w  ");
  REQUIRE(c.size() == 3);
  CHECK(c[0] == O("1"));
  CHECK(c[2] == O("w"));
  CHECK(default_corpus().size() == 13);
  CHECK_THROWS_AS(parse_corpus(" , "), ParseError);
  CHECK_THROWS_AS(parse_corpus("1,0"), DomainError);
  CHECK_THROWS_AS(parse_corpus("1,x"), ParseError);
}

TEST_CASE("min_host_radius samples") {
  WitnessTally tally;
  CHECK(min_host_radius(O("1"), O("2"), 4, 12, &tally) == 4u);
  CHECK(min_host_radius(O("2"), O("3"), 2, 12, &tally) == 2u);
  CHECK(min_host_radius(O("3"), O("2"), 2, 10) == std::nullopt);
  CHECK(tally.produced == 2);
  CHECK(tally.valid == 2);
}

TEST_CASE("refutation_radius samples") {
  CHECK(refutation_radius(O("2"), O("1"), 4, 20) == 1u);
  CHECK(refutation_radius(O("3"), O("2"), 4, 20) == 2u);
  CHECK(refutation_radius(O("w+1"), O("w"), 3, 12) == std::nullopt);
  // Unrooted, a cherry is a path.
  CHECK(refutation_radius(O("2"), O("1"), 4, 20, true) == 2u);
}

TEST_CASE("verify on {1, 2}") {
  auto report = run_verify(config_for("1,2", 2, 10));
  REQUIRE(report.records.size() == 1);
  const auto& r = report.records[0];
  CHECK(r.alpha == O("1"));
  CHECK(r.beta == O("2"));
  CHECK(r.positive == 2u);
  CHECK(r.negative == 1u);
  CHECK(r.certificate_ok);
  CHECK(r.witnesses.produced == r.witnesses.valid);
}

TEST_CASE("verify on {2, 3}") {
  auto report = run_verify(config_for("2,3", 4, 20));
  REQUIRE(report.records.size() == 1);
  CHECK(report.records[0].negative == 2u);
  CHECK(report.records[0].certificate_ok);
}

TEST_CASE("verify on {w, w+1} finds no finite refutation") {
  auto report = run_verify(config_for("w,w+1", 3, 20));
  REQUIRE(report.records.size() == 1);
  const auto& r = report.records[0];
  CHECK(r.negative == std::nullopt);
  CHECK(r.positive.has_value());
  CHECK(r.certificate_ok);

  auto doc = nlohmann::json::parse(report_to_json(report));
  const auto& rec = doc["records"][0];
  CHECK(rec["negative"]["no_finite_refutation_up_to"] == 3);
  CHECK(rec["negative"]["host_radius"] == 20);
  CHECK(rec["certificate"]["ok"] == true);
}

TEST_CASE("report lists every pair once with all fields") {
  auto config = config_for("1,2,3,w,w+1", 3, 8);
  config.jobs = 3;
  auto report = run_verify(config);
  CHECK(report.records.size() == 10);
  auto doc = nlohmann::json::parse(report_to_json(report));
  REQUIRE(doc["records"].size() == 10);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& rec : doc["records"]) {
    for (const char* field : {"alpha", "beta", "positive", "negative", "free_negative", "certificate", "witnesses"})
      CHECK(rec.contains(field));
    seen.emplace(rec["alpha"], rec["beta"]);
    CHECK(parse_ordinal(rec["alpha"].get<std::string>()) < parse_ordinal(rec["beta"].get<std::string>()));
    CHECK(rec["witnesses"]["produced"] == rec["witnesses"]["valid"]);
  }
  CHECK(seen.size() == 10);

  // Deterministic apart from timings.
  auto again = run_verify(config);
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    CHECK(again.records[k].positive == report.records[k].positive);
    CHECK(again.records[k].negative == report.records[k].negative);
    CHECK(again.records[k].free_negative == report.records[k].free_negative);
  }
}

TEST_CASE("verify rejects bad configurations") {
  CHECK_THROWS_AS(run_verify(config_for("1,2", 0, 4)), DomainError);
  CHECK_THROWS_AS(run_verify(config_for("1,2", 5, 4)), DomainError);
}
