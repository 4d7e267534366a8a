#include "knotcert/families.hpp"

#include <stdexcept>

namespace knotcert {

namespace {

// 2t - 1: the axis class in the Alexander module of 9_46.
LaurentPoly two_t_minus_one() {
  return LaurentPoly::from_coeffs({Rational(-1), Rational(2)});
}

CertifiedValue recomputed_companion_rho0(const KnotDescriptor& companion) {
  return rho0(companion);
}

}  // namespace

void validate_family(const FamilyDescriptor& f) {
  if (f.copies == 0) throw std::invalid_argument("family needs at least one pattern copy");
  if (f.infection.axis_count == 0)
    throw std::invalid_argument("family needs at least one infection axis");
  LaurentPoly axis = f.infection.axis_primary;
  if (axis.is_zero() || axis.is_unit())
    throw std::invalid_argument("axis polynomial must be a non-unit");
  if (!(axis == axis.canonical()))
    throw std::invalid_argument("axis polynomial must be canonical");

  // The ambient knot really is the copies-fold sum of the pattern.
  LambdaModule pattern_module = alexander_module(f.pattern);
  LambdaModule expected = pattern_module;
  for (unsigned i = 1; i < f.copies; ++i) expected = direct_sum(expected, pattern_module);
  LambdaModule level_module = alexander_module(f.seifert_level);
  if (!(level_module == expected))
    throw std::invalid_argument(
        "seifert-level module is not the copies-fold sum of the pattern module");

  // Each axis must see its primary class: one generator per axis at least.
  unsigned mult = primary_multiplicity(level_module, axis);
  if (mult < f.infection.axis_count)
    throw std::invalid_argument("axis multiplicity below the number of axes");

  // The stored companion rho0 must be reproducible on the nose.
  CertifiedValue recomputed = recomputed_companion_rho0(f.infection.companion);
  if (!(recomputed == f.infection.companion_rho0))
    throw std::invalid_argument("stored companion rho0 does not match recomputation");

  if (f.pattern_slack_per_copy.lower() < 0)
    throw std::invalid_argument("pattern slack cannot be negative");
  const bool ribbon = f.pattern.meta().ribbon.value_or(false);
  const bool zero_slack =
      f.pattern_slack_per_copy.is_exact() && f.pattern_slack_per_copy.value() == 0;
  if (zero_slack && !ribbon)
    throw std::invalid_argument(
        "zero slack is only justified for ribbon patterns; supply a slack bound");
}

unsigned minimal_companion_count(const Rational& threshold) {
  if (threshold < 0) throw std::invalid_argument("negative rho threshold");
  // least N with 4N/3 > threshold
  Integer n = floor_div(3 * threshold.get_num(), 4 * threshold.get_den()) + 1;
  unsigned N = static_cast<unsigned>(n.get_ui());
  Rational at_n(4 * static_cast<long>(N), 3);
  at_n.canonicalize();
  if (!(at_n > threshold)) throw std::logic_error("companion count fails its defining inequality");
  if (N > 1) {
    Rational at_prev(4 * (static_cast<long>(N) - 1), 3);
    at_prev.canonicalize();
    if (at_prev > threshold) throw std::logic_error("companion count is not minimal");
  }
  return N;
}

FamilyDescriptor thm_c_family(unsigned g, unsigned n) {
  KnotDescriptor pattern = builtin_knot("9_46");
  const unsigned copies = 2 * g + n + 1;
  const Rational threshold(4 * static_cast<long>(g) + 2 * static_cast<long>(n));
  const unsigned N = minimal_companion_count(threshold);
  KnotDescriptor companion = connected_sum_power(builtin_knot("left_trefoil"), N);
  CertifiedValue crho = recomputed_companion_rho0(companion);
  Rational expected_rho(4 * static_cast<long>(N), 3);
  expected_rho.canonicalize();
  if (!crho.is_exact() || crho.value() != expected_rho)
    throw std::logic_error("trefoil companion rho0 must be exactly 4N/3");
  FamilyDescriptor f{pattern,
                     copies,
                     InfectionDatum{two_t_minus_one(), copies, companion, crho},
                     CertifiedValue::exact(Rational(0)),
                     connected_sum_power(pattern, copies)};
  validate_family(f);
  return f;
}

KnotDescriptor thm_d_pattern() {
  PolyMatrix pres = PolyMatrix::diagonal({cyclotomic(30), cyclotomic(30)});
  ModuleSurrogate s{pres, /*signature_zero=*/true};
  return KnotDescriptor("phi30_pattern", std::move(s));
}

FamilyDescriptor thm_d_family(unsigned g, const CertifiedValue& slack_per_copy) {
  if (slack_per_copy.lower() < 0)
    throw std::invalid_argument("slack bound cannot be negative");
  KnotDescriptor pattern = thm_d_pattern();
  const unsigned copies = 2 * g + 1;
  // Margin target: 4N/3 > 4g + copies * slack, using the slack's upper end so
  // the inequality survives the assumption in its worst case.
  const Rational threshold =
      Rational(4 * static_cast<long>(g)) + Rational(copies) * slack_per_copy.upper();
  const unsigned N = minimal_companion_count(threshold);
  KnotDescriptor companion = connected_sum_power(builtin_knot("left_trefoil"), N);
  CertifiedValue crho = recomputed_companion_rho0(companion);
  Rational expected_rho(4 * static_cast<long>(N), 3);
  expected_rho.canonicalize();
  if (!crho.is_exact() || crho.value() != expected_rho)
    throw std::logic_error("trefoil companion rho0 must be exactly 4N/3");
  FamilyDescriptor f{pattern,
                     copies,
                     InfectionDatum{cyclotomic(30), copies, companion, crho},
                     slack_per_copy,
                     connected_sum_power(pattern, copies)};
  validate_family(f);
  return f;
}

KnotDescriptor thm_g_family(unsigned g, unsigned b2) {
  return connected_sum_power(builtin_knot("9_46"), 4 * g + 2 * b2 + 1);
}

FamilyDescriptor satellite_descriptor(const KnotDescriptor& pattern,
                                      const LaurentPoly& axis_primary,
                                      const KnotDescriptor& companion,
                                      std::optional<CertifiedValue> slack) {
  CertifiedValue effective_slack = CertifiedValue::exact(Rational(0));
  if (pattern.meta().ribbon.value_or(false)) {
    // Ribbon patterns contribute nothing; any supplied slack is ignored in
    // favor of the sharper exact value.
  } else if (slack.has_value()) {
    effective_slack = *slack;
  } else {
    throw std::invalid_argument(
        "pattern is not known ribbon: an explicit slack bound is required");
  }
  FamilyDescriptor f{pattern,
                     1,
                     InfectionDatum{axis_primary.canonical(), 1, companion,
                                    recomputed_companion_rho0(companion)},
                     effective_slack,
                     pattern};
  validate_family(f);
  return f;
}

Integer cha_rho_bound(unsigned crossing_number) {
  return Integer(69713280) * Integer(crossing_number);
}

}  // namespace knotcert
