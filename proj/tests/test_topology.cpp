#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "knotcert/certify.hpp"
#include "oracles.hpp"

using namespace knotcert;

TEST_CASE("arf invariants of the built-in table") {
  CHECK(arf(builtin_knot("trefoil")) == 1);
  CHECK(arf(builtin_knot("left_trefoil")) == 1);
  CHECK(arf(builtin_knot("figure_eight")) == 1);
  CHECK(arf(builtin_knot("9_46")) == 0);
  CHECK(arf(builtin_knot("unknot")) == 0);
  CHECK(is_stably_doubly_slice(builtin_knot("9_46")));
  CHECK(is_stably_doubly_slice(builtin_knot("unknot")));
  CHECK_FALSE(is_stably_doubly_slice(builtin_knot("trefoil")));
  // Arf is additive mod 2 under connected sum
  const KnotDescriptor two = connected_sum(builtin_knot("trefoil"), builtin_knot("figure_eight"));
  CHECK(arf(two) == 0);
  CHECK(arf(connected_sum(two, builtin_knot("left_trefoil"))) == 1);
}

TEST_CASE("arf agrees with majority-vote enumeration of the quadratic form") {
  for (const char* name : {"trefoil", "left_trefoil", "figure_eight", "9_46"}) {
    const KnotDescriptor& k = builtin_knot(name);
    CHECK(arf(k) == oracle::arf_democratic(k.seifert()));
  }
  std::mt19937_64 rng(424243u);
  std::uniform_int_distribution<unsigned> genus(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const SeifertMatrix v = oracle::random_seifert(rng, genus(rng));
    CHECK(arf(KnotDescriptor("r", v)) == oracle::arf_democratic(v));
  }
}

TEST_CASE("branched cover orders of the trefoil") {
  const KnotDescriptor& k = builtin_knot("trefoil");
  const long expect[] = {3, 4, 3, 1, -1, 1, 3};  // -1 marks infinite
  for (unsigned n = 2; n <= 8; ++n) {
    const auto order = branched_cover_order(k, n);
    if (expect[n - 2] < 0) {
      CHECK_FALSE(order.has_value());
    } else {
      REQUIRE(order.has_value());
      CHECK(*order == expect[n - 2]);
    }
  }
  const auto nine = branched_cover_order(builtin_knot("9_46"), 2);
  REQUIRE(nine.has_value());
  CHECK(*nine == 9);
  const auto five = branched_cover_order(builtin_knot("figure_eight"), 2);
  REQUIRE(five.has_value());
  CHECK(*five == 5);
  for (unsigned n = 2; n <= 6; ++n) {
    const auto u = branched_cover_order(builtin_knot("unknot"), n);
    REQUIRE(u.has_value());
    CHECK(*u == 1);
  }
}

TEST_CASE("cover orders multiply under connected sum and match complex enclosures") {
  const KnotDescriptor sum = connected_sum(builtin_knot("trefoil"), builtin_knot("figure_eight"));
  for (unsigned n = 2; n <= 5; ++n) {
    const auto a = branched_cover_order(builtin_knot("trefoil"), n);
    const auto b = branched_cover_order(builtin_knot("figure_eight"), n);
    const auto ab = branched_cover_order(sum, n);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    REQUIRE(ab.has_value());
    CHECK(*ab == *a * *b);
  }
  for (const char* name : {"trefoil", "figure_eight", "9_46"}) {
    const KnotDescriptor& k = builtin_knot(name);
    const LaurentPoly delta = alexander_polynomial(k);
    for (unsigned n = 2; n <= 12; ++n) {
      const auto order = branched_cover_order(k, n);
      const auto [lo, hi] = oracle::cover_order_enclosure(delta, n);
      if (!order) {
        CHECK(lo <= 0.0);
      } else {
        CHECK(lo <= order->get_d());
        CHECK(order->get_d() <= hi);
      }
    }
  }
}

TEST_CASE("prime power cover screen") {
  const CoverScreen clean = prime_power_cover_screen(thm_d_pattern(), 32);
  CHECK(clean.all_trivial);
  const std::set<unsigned> expected_ns = {2,  3,  4,  5,  7,  8,  9,  11, 13,
                                          16, 17, 19, 23, 25, 27, 29, 31, 32};
  std::set<unsigned> seen;
  for (const auto& [n, order] : clean.orders) {
    seen.insert(n);
    CHECK(order == 1);
  }
  CHECK(seen == expected_ns);

  const CoverScreen dirty = prime_power_cover_screen(builtin_knot("9_46"), 8);
  CHECK_FALSE(dirty.all_trivial);
  bool found = false;
  for (const auto& [n, order] : dirty.orders)
    if (n == 2) {
      found = true;
      CHECK(order == 9);
    }
  CHECK(found);
}

TEST_CASE("built-in table, aliases, metadata") {
  const auto names = builtin_names();
  for (const char* required : {"unknot", "trefoil", "left_trefoil", "figure_eight", "9_46"})
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  CHECK(builtin_knot("3_1").seifert().matrix() == builtin_knot("trefoil").seifert().matrix());
  CHECK(builtin_knot("right_trefoil").name() == builtin_knot("trefoil").name());
  CHECK(builtin_knot("4_1").seifert().matrix() == builtin_knot("fig8").seifert().matrix());
  CHECK_THROWS_AS(builtin_knot("10_139"), std::out_of_range);

  CHECK(builtin_knot("unknot").meta().ribbon == true);
  CHECK(builtin_knot("unknot").meta().doubly_slice == true);
  CHECK(builtin_knot("9_46").meta().ribbon == true);
  CHECK(builtin_knot("9_46").meta().crossing_number == 9u);
  CHECK_FALSE(builtin_knot("trefoil").meta().ribbon.has_value());
}

TEST_CASE("connected sums: naming, genus, kind mismatch") {
  const KnotDescriptor& t = builtin_knot("trefoil");
  CHECK(connected_sum_power(t, 0).name() == "unknot");
  CHECK(connected_sum_power(t, 0).seifert().size() == 0);
  CHECK(connected_sum_power(t, 1).name() == "trefoil");
  const KnotDescriptor t3 = connected_sum_power(t, 3);
  CHECK(t3.name() == "trefoil^#3");
  CHECK(t3.seifert().size() == 6);
  CHECK(t3.seifert().genus() == 3);
  // surrogate powers stay in module land
  const KnotDescriptor p3 = connected_sum_power(thm_d_pattern(), 3);
  CHECK_FALSE(p3.has_seifert());
  CHECK(min_generators(alexander_module(p3)) == 6);
  // a Seifert-level knot cannot be summed with a module surrogate
  CHECK_THROWS_AS(connected_sum(t, thm_d_pattern()), std::invalid_argument);
}

TEST_CASE("visibly hyperbolic pairings") {
  const auto witness = is_visibly_hyperbolic(builtin_knot("9_46"));
  REQUIRE(witness.has_value());
  CHECK(witness->size() == 1);
  CHECK_FALSE(is_visibly_hyperbolic(builtin_knot("trefoil")).has_value());
  CHECK_FALSE(is_visibly_hyperbolic(builtin_knot("figure_eight")).has_value());
  const auto doubled = is_visibly_hyperbolic(connected_sum_power(builtin_knot("9_46"), 2));
  REQUIRE(doubled.has_value());
  CHECK(doubled->size() == 2);
  std::mt19937_64 rng(7u);
  CHECK_THROWS_AS(is_visibly_hyperbolic(KnotDescriptor("big", oracle::random_seifert(rng, 5))),
                  std::invalid_argument);
}

TEST_CASE("minimal companion counts") {
  CHECK(minimal_companion_count(Rational(0)) == 1);
  CHECK(minimal_companion_count(Rational(4)) == 4);   // 4N/3 > 4 first at N = 4
  CHECK(minimal_companion_count(Rational(8)) == 7);   // 4*6/3 = 8 is not strict
  CHECK(minimal_companion_count(Rational(4, 3)) == 2);
  for (long thr = 0; thr <= 20; ++thr) {
    const unsigned n = minimal_companion_count(Rational(thr));
    CHECK(Rational(4 * static_cast<long>(n), 3) > thr);
    if (n > 1) CHECK_FALSE(Rational(4 * (static_cast<long>(n) - 1), 3) > thr);
  }
}

TEST_CASE("thm-c family members") {
  const FamilyDescriptor f = thm_c_family(1, 2);
  CHECK(f.copies == 5);
  CHECK(f.pattern.name() == "9_46");
  CHECK(f.infection.axis_count == 5);
  CHECK(f.infection.axis_primary == LaurentPoly::from_coeffs({-1, 2}, 0).canonical());
  CHECK(f.infection.companion.name() == "left_trefoil^#7");
  CHECK(f.infection.companion_rho0.is_exact());
  CHECK(f.infection.companion_rho0.value() == Rational(28, 3));
  CHECK(f.pattern_slack_per_copy == CertifiedValue::exact(0));
  CHECK(f.seifert_level.name() == "9_46^#5");
  CHECK(f.seifert_level.seifert().size() == 10);
  CHECK_NOTHROW(validate_family(f));

  const FamilyDescriptor base = thm_c_family(0, 0);
  CHECK(base.copies == 1);
  CHECK(base.infection.companion.name() == "left_trefoil");
  CHECK(base.infection.companion_rho0.value() == Rational(4, 3));
}

TEST_CASE("thm-d family members") {
  const FamilyDescriptor f = thm_d_family(1, CertifiedValue::exact(6));
  CHECK(f.copies == 3);
  CHECK(f.infection.axis_count == 3);
  CHECK(f.infection.axis_primary == cyclotomic(30));
  // margin must clear 2r = 4 after deducting 3 copies * slack 6:
  // 4N/3 > 4 + 18 forces N = 17
  CHECK(f.infection.companion.name() == "left_trefoil^#17");
  CHECK(f.infection.companion_rho0.value() == Rational(68, 3));
  CHECK_FALSE(f.pattern.has_seifert());
  CHECK_FALSE(f.seifert_level.has_seifert());
  CHECK(min_generators(alexander_module(f.seifert_level)) == 6);
  CHECK_NOTHROW(validate_family(f));
}

TEST_CASE("thm-g family members") {
  CHECK(thm_g_family(0, 0).name() == "9_46");
  const KnotDescriptor k = thm_g_family(1, 0);
  CHECK(k.name() == "9_46^#5");
  CHECK(min_generators(alexander_module(k)) == 5);
  CHECK(thm_g_family(1, 1).seifert().size() == 14);
  CHECK(thm_g_family(2, 0).seifert().size() == 18);
}

TEST_CASE("satellite descriptors and slack policy") {
  const LaurentPoly axis = LaurentPoly::from_coeffs({-1, 2}, 0).canonical();
  // ribbon pattern: slack defaults to exactly 0
  const FamilyDescriptor s =
      satellite_descriptor(builtin_knot("9_46"), axis, builtin_knot("left_trefoil"));
  CHECK(s.copies == 1);
  CHECK(s.pattern_slack_per_copy == CertifiedValue::exact(0));
  CHECK(s.infection.companion_rho0.value() == Rational(4, 3));
  CHECK_NOTHROW(validate_family(s));

  // non-ribbon pattern: an explicit slack is mandatory
  const LaurentPoly phi6 = cyclotomic(6);
  CHECK_THROWS_AS(
      satellite_descriptor(builtin_knot("trefoil"), phi6, builtin_knot("left_trefoil")),
      std::invalid_argument);
  const CertifiedValue wide = CertifiedValue::interval(Rational(0), Rational(13));
  const FamilyDescriptor loose =
      satellite_descriptor(builtin_knot("trefoil"), phi6, builtin_knot("left_trefoil"), wide);
  CHECK(loose.pattern_slack_per_copy == wide);
  CHECK_NOTHROW(validate_family(loose));

  // the axis must actually appear in the pattern's module
  CHECK_THROWS_AS(
      satellite_descriptor(builtin_knot("9_46"), phi6, builtin_knot("left_trefoil")),
      std::invalid_argument);
}

TEST_CASE("validate_family rejects tampering") {
  {
    FamilyDescriptor f = thm_c_family(1, 2);
    f.copies = 6;
    CHECK_THROWS_AS(validate_family(f), std::invalid_argument);
  }
  {
    FamilyDescriptor f = thm_c_family(1, 2);
    f.infection.axis_count = 7;  // more axes than the module supports
    CHECK_THROWS_AS(validate_family(f), std::invalid_argument);
  }
  {
    FamilyDescriptor f = thm_c_family(1, 2);
    f.infection.companion_rho0 = CertifiedValue::exact(Rational(29, 3));
    CHECK_THROWS_AS(validate_family(f), std::invalid_argument);
  }
  {
    FamilyDescriptor f = thm_c_family(1, 2);
    f.pattern_slack_per_copy = CertifiedValue::exact(-1);  // a negative rho bound is unsound
    CHECK_THROWS_AS(validate_family(f), std::invalid_argument);
  }
  {
    // loosening the slack of a ribbon pattern only weakens margins; admissible
    FamilyDescriptor f = thm_c_family(1, 2);
    f.pattern_slack_per_copy = CertifiedValue::exact(1);
    CHECK_NOTHROW(validate_family(f));
  }
}

TEST_CASE("crossing-number rho bound") {
  CHECK(cha_rho_bound(0) == 0);
  CHECK(cha_rho_bound(1) == 69713280);
  CHECK(cha_rho_bound(9) == Integer(69713280) * 9);
}

TEST_CASE("gds_X certificates: pass, fail, monotonicity") {
  const FamilyDescriptor f = thm_c_family(1, 2);
  const Certificate pass = gds_X_lower_bound(f, 2, 1);
  CHECK(pass.status == CertStatus::Pass);
  CHECK(pass.int_inputs.at("r") == 4);
  CHECK(pass.int_inputs.at("axis_multiplicity") == 5);
  CHECK_FALSE(pass.conclusion.empty());
  CHECK(pass.conditional_on.empty());
  CHECK(reverify(pass));

  // passing at r means passing at every smaller r
  for (unsigned r = 0; r <= 4; ++r)
    CHECK(certify_no_h1_embedding(f, r).status == CertStatus::Pass);

  const Certificate fail = certify_no_h1_embedding(thm_c_family(0, 0), 5);
  CHECK(fail.status == CertStatus::Fail);
  CHECK(fail.conclusion.empty());
  CHECK(reverify(fail));
}

TEST_CASE("thm-d companion sizing absorbs the slack's upper end") {
  // with slack in [6,7] the constructor budgets for the worst case 7:
  // 4N/3 > 4 + 3*7 forces N = 19, and the certificate still passes
  const FamilyDescriptor f = thm_d_family(1, CertifiedValue::interval(Rational(6), Rational(7)));
  CHECK(f.infection.companion.name() == "left_trefoil^#19");
  const Certificate c = gds_X_lower_bound(f, 0, 1);
  CHECK(c.status == CertStatus::Pass);
  CHECK_FALSE(c.conditional_on.empty());
  CHECK(reverify(c));
}

TEST_CASE("interval slack can leave a certificate inconclusive") {
  // a hand-picked slack window [1,2] around the companion's rho0 = 4/3 makes
  // the margin [-2/3, 1/3] straddle the threshold 2r = 0
  const FamilyDescriptor f = satellite_descriptor(
      builtin_knot("trefoil"), cyclotomic(6), builtin_knot("left_trefoil"),
      CertifiedValue::interval(Rational(1), Rational(2)));
  const Certificate c = certify_no_h1_embedding(f, 0);
  CHECK(c.status == CertStatus::Inconclusive);
  CHECK(c.conclusion.empty());
  CHECK_FALSE(c.conditional_on.empty());
  CHECK(reverify(c));
  bool saw_inconclusive_check = false;
  for (const auto& chk : c.checks)
    if (chk.result == Cmp::Inconclusive) saw_inconclusive_check = true;
  CHECK(saw_inconclusive_check);
}

TEST_CASE("reverify detects tampering") {
  Certificate c = gds_X_lower_bound(thm_c_family(1, 2), 2, 1);
  REQUIRE(reverify(c));
  {
    Certificate bad = c;
    bad.checks[1].result = Cmp::False;
    CHECK_FALSE(reverify(bad));
  }
  {
    Certificate bad = c;
    bad.status = CertStatus::Fail;
    CHECK_FALSE(reverify(bad));
  }
  {
    Certificate bad = c;
    bad.conclusion.clear();  // a passing certificate must state its conclusion
    CHECK_FALSE(reverify(bad));
  }
  {
    Certificate bad = c;
    bad.checks[2].rhs = CertifiedValue::exact(100);  // inequality no longer holds
    CHECK_FALSE(reverify(bad));
  }
}

TEST_CASE("thm-d certificate carries the cover screen") {
  const Certificate c = thm_d_certificate(1, CertifiedValue::exact(6));
  CHECK(c.status == CertStatus::Pass);
  CHECK(c.int_inputs.at("screen_max_n") == 32);
  CHECK_FALSE(c.conditional_on.empty());
  CHECK(reverify(c));
  bool screen_check = false;
  for (const auto& chk : c.checks)
    if (chk.description.find("cover") != std::string::npos) screen_check = true;
  CHECK(screen_check);
}

TEST_CASE("dsn certificates and the arf gate") {
  const Certificate c = dsn_lower_bound(thm_c_family(0, 4), 2);
  CHECK(c.status == CertStatus::Pass);
  CHECK(c.int_inputs.at("r") == 4);
  CHECK(c.int_inputs.at("r_max") == 4);
  CHECK(c.int_inputs.at("dsn_x_b2_max") == 0);
  CHECK(reverify(c));

  // the trefoil has arf = 1: dsn is undefined, certification refuses
  const FamilyDescriptor odd = satellite_descriptor(
      builtin_knot("trefoil"), cyclotomic(6), builtin_knot("left_trefoil"),
      CertifiedValue::exact(13));
  CHECK_THROWS_AS(dsn_lower_bound(odd, 0), std::invalid_argument);
}

TEST_CASE("superslice and signature certificates") {
  const Certificate s = superslice_lower_bound(thm_g_family(1, 0), 0);
  CHECK(s.status == CertStatus::Pass);
  CHECK(s.int_inputs.at("min_generators") == 5);
  CHECK(s.int_inputs.at("bound") == 2);
  CHECK_FALSE(s.conclusion.empty());
  CHECK(reverify(s));

  const Certificate t = signature_gds_bound(builtin_knot("trefoil"));
  CHECK(t.status == CertStatus::Pass);
  CHECK(t.int_inputs.at("bound") == 2);
  CHECK(reverify(t));
  CHECK(signature_gds_bound(builtin_knot("9_46")).int_inputs.at("bound") == 0);
}

TEST_CASE("inequality report for the ribbon pattern") {
  const BoundsReport r = inequality_report(builtin_knot("9_46"));
  CHECK(r.name == "9_46");
  CHECK(r.has_seifert);
  CHECK(r.g3_upper == 1u);
  CHECK(r.gds_upper == 2u);
  CHECK(r.gds_lower_signature == 0);
  CHECK(r.min_gens == 1);
  CHECK(r.arf_value == 0);
  CHECK(r.stably_doubly_slice);
  CHECK(r.dsn_defined);
  CHECK(r.sn_upper == 0u);
  CHECK(r.consistent);
  CHECK_FALSE(r.annotations.empty());

  const BoundsReport t = inequality_report(builtin_knot("trefoil"));
  CHECK(t.gds_lower_signature == 2);
  CHECK(t.gds_upper == 2u);
  CHECK_FALSE(t.dsn_defined);
  CHECK_FALSE(t.sn_upper.has_value());
  CHECK(t.consistent);
}
