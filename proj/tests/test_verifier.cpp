#include "doctest.h"

#include "ztg/verifier.hpp"

using namespace ztg;

namespace {

InstanceSpec zn(std::int64_t n) {
  InstanceSpec s;
  s.ring = {n};
  s.blocks = {{n}};
  return s;
}

TheoremReport run(const std::string& id, const InstanceSpec& spec) {
  Workspace ws(spec);
  return check_theorem(id, ws);
}

} // namespace

TEST_CASE("fixture checks") {
  auto t34 = run("T3.4", zn(12));
  CHECK(t34.applicable);
  CHECK(t34.conclusion_holds == true);

  auto p416 = run("P4.16", zn(30));
  CHECK(p416.applicable);
  CHECK(p416.conclusion_holds == true);

  InstanceSpec z2z3;
  z2z3.ring = {6};
  z2z3.blocks = {{2, 3}};
  auto t35 = run("T3.5", z2z3);
  CHECK(t35.applicable);
  CHECK(t35.conclusion_holds == true);

  auto l28 = run("L2.8", z2z3);
  CHECK(l28.applicable);
  CHECK(l28.conclusion_holds == true);
}

TEST_CASE("non-applicable hypotheses are reported, not failed") {
  // Z_4: the spectrum is a single prime, so T4.2 needs faithfulness of Mbar
  // which fails
  auto t42 = run("T4.2", zn(4));
  CHECK(!t42.applicable);
  CHECK(!t42.conclusion_holds.has_value());
}

TEST_CASE("instance JSON round trip and strictness") {
  InstanceSpec s = zn(12);
  s.t.kind = TSelector::Kind::Primes;
  s.t.primes = {0, 1};
  Json j = s.to_json();
  InstanceSpec back = InstanceSpec::from_json(j);
  CHECK(back.ring == s.ring);
  CHECK(back.blocks == s.blocks);
  CHECK(back.t.primes == s.t.primes);

  Json bad = j;
  bad["extra"] = 1;
  CHECK_THROWS_AS(InstanceSpec::from_json(bad), SchemaError);

  Json badt = j;
  badt["T"] = "everything";
  CHECK_THROWS_AS(InstanceSpec::from_json(badt), SchemaError);
}

TEST_CASE("theorem registry") {
  CHECK(is_theorem_id("T4.4"));
  CHECK(is_theorem_id("C4.13")); // alias
  CHECK(canonical_theorem_id("C4.13") == "L4.12");
  CHECK(!is_theorem_id("T9.9"));
}

TEST_CASE("family expansion") {
  Caps caps;
  auto f = expand_family("zn:2..10", caps);
  CHECK(f.size() == 9);
  CHECK(f[0].ring == std::vector<std::int64_t>{2});

  auto p = expand_family("products:max=8", caps);
  // includes multi-factor rings and multi-block shapes
  bool has_product_ring = false, has_two_blocks = false;
  for (const auto& s : p) {
    if (s.ring.size() > 1) has_product_ring = true;
    for (const auto& b : s.blocks)
      if (b.size() > 1) has_two_blocks = true;
  }
  CHECK(has_product_ring);
  CHECK(has_two_blocks);
  CHECK_THROWS_AS(expand_family("nope:1", caps), SchemaError);
}

TEST_CASE("small sweeps have no counterexamples") {
  Caps caps;
  SweepOptions opt;
  opt.theorems = {"R2.1", "T4.4"};
  auto fam = expand_family("zn:2..30", caps);
  SweepSummary sum = sweep(fam, opt);
  CHECK(sum.failed == 0);
  CHECK(sum.applicable > 0);
  CHECK(sum.total == sum.applicable + sum.not_applicable + sum.skipped);
}

TEST_CASE("caps produce skipped reports, not silent drops") {
  Caps caps;
  caps.max_elements = 10;
  SweepOptions opt;
  opt.theorems = {"T4.4"};
  auto fam = expand_family("zn:2..16", caps);
  SweepSummary sum = sweep(fam, opt);
  CHECK(sum.skipped > 0);
  CHECK(sum.total == sum.applicable + sum.not_applicable + sum.skipped);
  CHECK(sum.failed == 0);
}

TEST_CASE("localization retract fixture") {
  InstanceSpec s = zn(30);
  s.t.kind = TSelector::Kind::ClosedOf;
  s.t.closed_of = {{0}, {6}, {12}, {18}, {24}}; // 6Z_30; T = V(6Z_30)
  s.s_tuples = std::vector<std::vector<std::int64_t>>{{1}, {5}, {25}};
  auto t46 = run("T4.6", s);
  CHECK(t46.applicable);
  CHECK(t46.conclusion_holds == true);

  // without S the checker is not applicable
  auto no_s = run("T4.6", zn(30));
  CHECK(!no_s.applicable);
}

TEST_CASE("reports are deterministic") {
  auto a = run("R2.1", zn(12));
  auto b = run("R2.1", zn(12));
  CHECK(a.to_json() == b.to_json());
}
