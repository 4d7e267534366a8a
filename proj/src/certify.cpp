#include "knotcert/certify.hpp"

#include <sstream>

namespace knotcert {

const char* status_name(CertStatus s) {
  switch (s) {
    case CertStatus::Pass: return "pass";
    case CertStatus::Fail: return "fail";
    default: return "inconclusive";
  }
}

Cmp evaluate_relation(const CertifiedValue& lhs, const std::string& relation,
                      const CertifiedValue& rhs) {
  if (relation == ">") return lhs.greater_than(rhs);
  if (relation == ">=") return lhs.greater_equal(rhs);
  throw std::invalid_argument("unknown certificate relation: " + relation);
}

namespace {

CertStatus aggregate_status(const std::vector<CertCheck>& checks) {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (c.result == Cmp::False) return CertStatus::Fail;
    if (c.result == Cmp::Inconclusive) inconclusive = true;
  }
  return inconclusive ? CertStatus::Inconclusive : CertStatus::Pass;
}

// Run every relation, aggregate, and attach the conclusion only on a full
// pass - the "conclusion iff all checks pass" invariant lives here.
void finalize(Certificate& cert, const std::string& conclusion_on_pass) {
  for (auto& check : cert.checks)
    check.result = evaluate_relation(check.lhs, check.relation, check.rhs);
  cert.status = aggregate_status(cert.checks);
  cert.conclusion = cert.status == CertStatus::Pass ? conclusion_on_pass : "";
}

std::string describe_value(const CertifiedValue& v) {
  if (v.is_exact()) return format_rational(v.value());
  return "[" + format_rational(v.lower()) + ", " + format_rational(v.upper()) + "]";
}

}  // namespace

bool reverify(const Certificate& c) {
  for (const auto& check : c.checks) {
    if (evaluate_relation(check.lhs, check.relation, check.rhs) != check.result) return false;
  }
  if (aggregate_status(c.checks) != c.status) return false;
  const bool wants_conclusion = c.status == CertStatus::Pass;
  if (wants_conclusion != !c.conclusion.empty()) return false;
  return true;
}

Certificate certify_no_h1_embedding(const FamilyDescriptor& f, unsigned r) {
  Certificate cert;
  cert.claim = "no-h1-embedding";
  cert.int_inputs["r"] = r;
  cert.int_inputs["copies"] = f.copies;
  cert.int_inputs["axis_count"] = f.infection.axis_count;
  cert.text_inputs["knot"] = f.seifert_level.name();
  cert.text_inputs["axis_primary"] = f.infection.axis_primary.str();
  cert.text_inputs["companion"] = f.infection.companion.name();

  const unsigned mult =
      primary_multiplicity(alexander_module(f.seifert_level), f.infection.axis_primary);
  cert.int_inputs["axis_multiplicity"] = mult;

  // (i) the axis classes generate pairwise distinct primary summands, so any
  // submodule containing all of them needs at least axis_count generators.
  cert.checks.push_back({"axis classes span distinct primary summands (multiplicity check)",
                         CertifiedValue::exact(Rational(mult)), ">=",
                         CertifiedValue::exact(Rational(f.infection.axis_count)), Cmp::True});
  cert.checks.push_back({"axis generators escape every r-generated submodule",
                         CertifiedValue::exact(Rational(f.infection.axis_count)), ">",
                         CertifiedValue::exact(Rational(r)), Cmp::True});

  // (ii) the surviving signature integral beats the 2r allowance an embedding
  // would impose.
  CertifiedValue margin = f.infection.companion_rho0 -
                          Rational(f.copies) * f.pattern_slack_per_copy;
  cert.checks.push_back({"companion signature integral beats the embedding allowance",
                         margin, ">", CertifiedValue::exact(Rational(2 * static_cast<long>(r))),
                         Cmp::True});

  const bool zero_slack =
      f.pattern_slack_per_copy.is_exact() && f.pattern_slack_per_copy.value() == 0;
  if (!zero_slack) {
    cert.conditional_on.push_back(
        "assumed slack: each of the " + std::to_string(f.copies) +
        " pattern copies contributes at most " + describe_value(f.pattern_slack_per_copy) +
        " to the signature integral");
  }

  finalize(cert,
           "the zero-framed surgery manifold of " + f.seifert_level.name() +
               " admits no embedding into a closed simply connected 4-manifold inducing an H1 "
               "presentation with at most " +
               std::to_string(r) + " relations");
  return cert;
}

Certificate gds_X_lower_bound(const FamilyDescriptor& f, unsigned b2, unsigned g) {
  Certificate cert = certify_no_h1_embedding(f, 2 * g + b2);
  cert.claim = "gds-x-lower-bound";
  cert.int_inputs["g"] = g;
  cert.int_inputs["b2"] = b2;
  if (cert.status == CertStatus::Pass) {
    cert.conclusion = "gds_X(" + f.seifert_level.name() + ") > " + std::to_string(g) +
                      " for every closed simply connected 4-manifold X with b2(X) = " +
                      std::to_string(b2);
  }
  return cert;
}

Certificate dsn_lower_bound(const FamilyDescriptor& f, unsigned m) {
  if (arf(f.seifert_level) != 0)
    throw std::invalid_argument(
        "double stabilizing number undefined: the knot has Arf invariant 1");
  Certificate cert = certify_no_h1_embedding(f, 2 * m);
  cert.claim = "dsn-lower-bound";
  cert.int_inputs["m"] = m;

  // Largest r the same data would still obstruct; each extra unit of r
  // absorbs one stabilization or one unit of b2(X).
  const CertifiedValue margin =
      f.infection.companion_rho0 - Rational(f.copies) * f.pattern_slack_per_copy;
  long r_rho = rational_ceil(margin.lower() / 2).get_si() - 1;
  long r_max = std::min<long>(static_cast<long>(f.infection.axis_count) - 1, r_rho);
  cert.int_inputs["r_max"] = r_max;

  if (cert.status == CertStatus::Pass) {
    std::ostringstream conclusion;
    conclusion << "dsn(" << f.seifert_level.name() << ") > " << m;
    const long b2_max = r_max - 2 * static_cast<long>(m);
    if (b2_max >= 0) {
      cert.int_inputs["dsn_x_b2_max"] = b2_max;
      conclusion << "; moreover dsn_X > " << m
                 << " for every closed simply connected X with b2(X) <= " << b2_max;
    }
    cert.conclusion = conclusion.str();
  }
  return cert;
}

Certificate thm_d_certificate(unsigned g, const CertifiedValue& slack_per_copy,
                              unsigned screen_max_n) {
  FamilyDescriptor f = thm_d_family(g, slack_per_copy);
  Certificate cert = gds_X_lower_bound(f, 0, g);
  CoverScreen screen = prime_power_cover_screen(f.pattern, screen_max_n);
  cert.int_inputs["screen_max_n"] = screen_max_n;
  cert.checks.push_back({"prime-power branched covers of the pattern are homology spheres",
                         CertifiedValue::exact(Rational(screen.all_trivial ? 1 : 0)), ">=",
                         CertifiedValue::exact(Rational(1)), Cmp::True});
  auto& added = cert.checks.back();
  added.result = evaluate_relation(added.lhs, added.relation, added.rhs);
  const std::string conclusion = cert.conclusion;
  cert.status = aggregate_status(cert.checks);
  cert.conclusion = cert.status == CertStatus::Pass ? conclusion : "";
  return cert;
}

Certificate superslice_lower_bound(const KnotDescriptor& k, unsigned b2) {
  Certificate cert;
  cert.claim = "superslice-lower-bound";
  cert.text_inputs["knot"] = k.name();
  cert.int_inputs["b2"] = b2;
  const unsigned mu = min_generators(alexander_module(k));
  cert.int_inputs["min_generators"] = mu;
  // mu <= 4 g + 2 b2 for any unknotted-double surface of genus g in the
  // punctured X, hence g >= ceil((mu - 2 b2) / 4).
  long bound = 0;
  if (mu > 2 * b2)
    bound = ceil_div(Integer(mu - 2 * b2), Integer(4)).get_si();
  cert.int_inputs["bound"] = bound;
  if (bound > 0) {
    cert.checks.push_back({"generator count exceeds what smaller genus could present",
                           CertifiedValue::exact(Rational(mu)), ">",
                           CertifiedValue::exact(Rational(2 * static_cast<long>(b2) +
                                                          4 * (bound - 1))),
                           Cmp::True});
  } else {
    cert.checks.push_back({"generator count recorded", CertifiedValue::exact(Rational(mu)),
                           ">=", CertifiedValue::exact(Rational(0)), Cmp::True});
  }
  finalize(cert, "the X-superslice genus of " + k.name() + " is at least " +
                     std::to_string(bound) +
                     " for every closed simply connected X with b2(X) = " + std::to_string(b2));
  return cert;
}

Certificate signature_gds_bound(const KnotDescriptor& k) {
  Certificate cert;
  cert.claim = "signature-gds-bound";
  cert.text_inputs["knot"] = k.name();
  const int s = max_abs_signature(k);
  cert.int_inputs["bound"] = s;
  cert.checks.push_back({"largest absolute signature over the circle",
                         CertifiedValue::exact(Rational(s)), ">=",
                         CertifiedValue::exact(Rational(0)), Cmp::True});
  finalize(cert, "the double slice genus of " + k.name() + " is at least " + std::to_string(s));
  return cert;
}

BoundsReport inequality_report(const KnotDescriptor& k) {
  BoundsReport report;
  report.name = k.name();
  report.has_seifert = k.has_seifert();
  if (report.has_seifert) {
    report.g3_upper = static_cast<unsigned>(k.seifert().genus());
    report.gds_upper = 2 * *report.g3_upper;
  }
  SignatureProfile profile = signature_profile(k);
  report.gds_lower_signature = profile.max_abs;
  LambdaModule module = alexander_module(k);
  report.min_gens = min_generators(module);
  report.superslice_b2_0 =
      report.min_gens == 0
          ? 0
          : static_cast<unsigned>(ceil_div(Integer(report.min_gens), Integer(4)).get_ui());
  report.arf_value = arf(k);
  report.stably_doubly_slice = is_stably_doubly_slice(k);
  report.dsn_defined = report.arf_value == 0;
  if (k.meta().ribbon.value_or(false)) report.sn_upper = 0;
  report.annotations = {
      "for every closed simply connected X, gds_X(K) <= gds(K) and gs_X(K) <= gs(K)",
      "lower bounds shown for b2(X) = 0 only weaken as b2 grows",
  };
  report.consistent = true;
  if (report.gds_upper.has_value() &&
      report.gds_lower_signature > static_cast<int>(*report.gds_upper))
    report.consistent = false;
  if (report.has_seifert &&
      report.gds_lower_signature > 2 * static_cast<int>(*report.g3_upper))
    report.consistent = false;
  return report;
}

}  // namespace knotcert
