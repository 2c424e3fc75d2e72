#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bohr/bohr.hpp"

using namespace bohr;

namespace {

FunctionalSpec make_spec(FunctionalId id, int s = 1, double p = 1.0) {
  FunctionalSpec spec;
  spec.id = id;
  spec.s = s;
  spec.p = p;
  return spec;
}

}  // namespace

TEST_CASE("theorem campaign holds below the sharp radius") {
  CampaignReport rep = verify_theorem(make_spec(FunctionalId::FT1), 1.0, 50, 1);
  REQUIRE(rep.holds == 500);
  REQUIRE(rep.violated == 0);
  REQUIRE(rep.inconclusive == 0);
  REQUIRE(rep.errors.empty());
  REQUIRE(rep.total() == 500);
  REQUIRE(rep.ok());
  REQUIRE(rep.worst_margin > 0.0);
  REQUIRE(rep.worst_margin < 1.0);
}

TEST_CASE("campaigns cover the b1-zero and rotated-a0 samplers") {
  for (FunctionalId id : {FunctionalId::FTF, FunctionalId::FT6,
                          FunctionalId::FT2, FunctionalId::FT7}) {
    CampaignReport rep = verify_theorem(make_spec(id), 2.0, 20, 11);
    CAPTURE(to_string(id));
    REQUIRE(rep.ok());
    REQUIRE(rep.holds == 200);
  }
}

TEST_CASE("campaigns are deterministic in the seed") {
  CampaignReport a = verify_theorem(make_spec(FunctionalId::FT3), 2.0, 10, 77);
  CampaignReport b = verify_theorem(make_spec(FunctionalId::FT3), 2.0, 10, 77);
  REQUIRE(campaign_to_json(a).dump() == campaign_to_json(b).dump());
  CampaignReport c = verify_theorem(make_spec(FunctionalId::FT3), 2.0, 10, 78);
  REQUIRE(a.worst_margin != c.worst_margin);
}

TEST_CASE("campaign validation") {
  REQUIRE_THROWS_AS(verify_theorem(make_spec(FunctionalId::FT1), 1.0, 0, 1),
                    BadParameter);
  REQUIRE_THROWS_AS(verify_theorem(make_spec(FunctionalId::FT1), 0.5, 10, 1),
                    BadParameter);
}

TEST_CASE("sharpness scan finds a certified witness just above rho0") {
  for (double K : {1.0, 2.0}) {
    SharpnessScan scan = sharpness_scan(make_spec(FunctionalId::FT1), K);
    CAPTURE(K);
    REQUIRE(scan.witness.has_value());
    REQUIRE(scan.witness->rho > scan.rho0);
    REQUIRE(scan.witness->lhs.value - scan.witness->lhs.err > 1.0);
    for (const SharpnessSample& s : scan.samples) REQUIRE(s.rho > scan.rho0);
  }
}

TEST_CASE("sharpness witness replays from its serialized mapping") {
  FunctionalSpec spec = make_spec(FunctionalId::FT1);
  spec.qc = QuasiconformalParams::from_K(2.0);
  SharpnessScan scan = sharpness_scan(spec, 2.0);
  REQUIRE(scan.witness.has_value());
  HarmonicMapping f = mapping_from_json(json::parse(scan.witness_mapping_json));
  double rho = scan.witness->rho;
  BoundedValue lhs = evaluate(spec, f, rho, {-rho, 0.0});
  REQUIRE(classify(lhs, 1.0) == Verdict::Violated);
}

TEST_CASE("b1-zero sharpness respects the F-T6 lemma cap") {
  SharpnessScan scan = sharpness_scan(make_spec(FunctionalId::FT6), 1.0);
  REQUIRE(scan.witness.has_value());
  REQUIRE(scan.witness->rho < 1.0 / 3.0);
}

TEST_CASE("half-plane sharpness covers the Rogosinski functional") {
  SharpnessScan scan = sharpness_scan(make_spec(FunctionalId::FT2), 2.0);
  REQUIRE(scan.witness.has_value());
  REQUIRE(scan.witness->a < 0.5);  // small-a escalation for this family
}

TEST_CASE("sharpness scan validation") {
  REQUIRE_THROWS_AS(
      sharpness_scan(make_spec(FunctionalId::FT1), 2.0, {0.5}, {-0.05}),
      BadParameter);
  REQUIRE_THROWS_AS(
      sharpness_scan(make_spec(FunctionalId::FT1), 2.0, {1.5}, {0.05}),
      BadParameter);
}

TEST_CASE("lemma campaigns pass and are seed-deterministic") {
  for (LemmaId id : {LemmaId::L1, LemmaId::L2, LemmaId::L3, LemmaId::L4,
                     LemmaId::L5, LemmaId::L6}) {
    CampaignReport rep = verify_lemma(id, 60, 5);
    CAPTURE(to_string(id));
    REQUIRE(rep.ok());
    REQUIRE(rep.violated == 0);
    REQUIRE(rep.total() > 0);
  }
  CampaignReport a = verify_lemma(LemmaId::L3, 30, 9);
  CampaignReport b = verify_lemma(LemmaId::L3, 30, 9);
  REQUIRE(campaign_to_json(a).dump() == campaign_to_json(b).dump());
  REQUIRE_THROWS_AS(verify_lemma(LemmaId::L1, 0, 1), BadParameter);
  REQUIRE(parse_lemma_id("L4") == LemmaId::L4);
  REQUIRE_THROWS_AS(parse_lemma_id("L7"), UnknownId);
}

TEST_CASE("radius monotonicity study") {
  MonotonicityReport rep =
      radius_monotonicity({"E-T1", "E-TT1"}, {1.0, 2.0, 5.0});
  REQUIRE(rep.ok);
  REQUIRE(rep.rows.size() == 6);
  REQUIRE(rep.failures.empty());
  MonotonicityReport single = radius_monotonicity({"E-T7"}, {3.0});
  REQUIRE(single.ok);
  MonotonicityReport harm = radius_monotonicity({"E-E"}, {1.0, 2.0, 10.0});
  REQUIRE(harm.ok);
  REQUIRE_THROWS_AS(radius_monotonicity({"E-C1"}, {1.0, 2.0}), BadParameter);
  REQUIRE_THROWS_AS(radius_monotonicity({"E-D"}, {1.0, 2.0}), BadParameter);
  REQUIRE_THROWS_AS(radius_monotonicity({"E-A1"}, {1.0, 2.0}), BadParameter);
  REQUIRE_THROWS_AS(radius_monotonicity({"E-T1"}, {}), BadParameter);
}

TEST_CASE("report serialization carries the schema tag and count fields") {
  CampaignReport rep = verify_theorem(make_spec(FunctionalId::FT1), 2.0, 5, 3);
  json j = campaign_to_json(rep);
  REQUIRE(j["schema"] == 1);
  REQUIRE(j["spec"] == "F-T1");
  REQUIRE(j["holds"].get<long>() + j["violated"].get<long>() +
              j["inconclusive"].get<long>() ==
          50);
  SharpnessScan scan = sharpness_scan(make_spec(FunctionalId::FT1), 2.0);
  json s = scan_to_json(scan);
  REQUIRE(s["schema"] == 1);
  REQUIRE(s["rho0"].get<double>() == Catch::Approx(3.0 / 11.0));
  REQUIRE_FALSE(s["witness"].is_null());
  json m = monotonicity_to_json(radius_monotonicity({"E-T1"}, {1.0, 4.0}));
  REQUIRE(m["schema"] == 1);
  REQUIRE(m["ok"] == true);
}
