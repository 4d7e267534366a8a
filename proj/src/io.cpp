#include "knotcert/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "knotcert/version.hpp"

namespace knotcert {

using nlohmann::json;

json poly_to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [exp, c] : p.terms()) j[std::to_string(exp)] = format_rational(c);
  return j;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t used = 0;
    const long exp = std::stol(it.key(), &used);
    if (used != it.key().size())
      throw std::invalid_argument("polynomial exponent is not an integer: " + it.key());
    p += LaurentPoly::monomial(parse_rational(it.value().get<std::string>()), exp);
  }
  return p;
}

json certified_to_json(const CertifiedValue& v) {
  json j = json::object();
  if (v.is_exact()) {
    j["exact"] = format_rational(v.value());
  } else {
    j["interval"] = json::array({format_rational(v.lower()), format_rational(v.upper())});
  }
  return j;
}

CertifiedValue certified_from_json(const json& j) {
  if (j.contains("exact"))
    return CertifiedValue::exact(parse_rational(j.at("exact").get<std::string>()));
  if (j.contains("interval")) {
    const json& pair = j.at("interval");
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("interval must be a [lo, hi] pair");
    return CertifiedValue::interval(parse_rational(pair[0].get<std::string>()),
                                    parse_rational(pair[1].get<std::string>()));
  }
  throw std::invalid_argument("certified value needs an \"exact\" or \"interval\" key");
}

json module_to_json(const LambdaModule& m) {
  json factors = json::array();
  for (const auto& f : m.invariant_factors) factors.push_back(poly_to_json(f));
  json j = json::object();
  j["free_rank"] = m.free_rank;
  j["invariant_factors"] = factors;
  return j;
}

LambdaModule module_from_json(const json& j) {
  std::vector<LaurentPoly> factors;
  for (const json& f : j.at("invariant_factors")) factors.push_back(poly_from_json(f));
  return LambdaModule(j.at("free_rank").get<unsigned>(), std::move(factors));
}

namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p())
    throw std::invalid_argument("matrix entry too large for the JSON integer schema");
  return z.get_si();
}

KnotMeta meta_from_json(const json& j) {
  KnotMeta meta;
  if (j.contains("ribbon")) meta.ribbon = j.at("ribbon").get<bool>();
  if (j.contains("doubly_slice")) meta.doubly_slice = j.at("doubly_slice").get<bool>();
  if (j.contains("crossing_number"))
    meta.crossing_number = j.at("crossing_number").get<unsigned>();
  return meta;
}

}  // namespace

json knot_to_json(const KnotDescriptor& k) {
  json j = json::object();
  j["name"] = k.name();
  if (k.has_seifert()) {
    const IntMat& v = k.seifert().matrix();
    json rows = json::array();
    for (std::size_t i = 0; i < v.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < v.cols(); ++c) row.push_back(to_long(v.at(i, c)));
      rows.push_back(std::move(row));
    }
    j["seifert"] = std::move(rows);
  } else {
    const ModuleSurrogate& s = k.surrogate();
    json rows = json::array();
    for (std::size_t i = 0; i < s.presentation.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < s.presentation.cols(); ++c)
        row.push_back(poly_to_json(s.presentation.at(i, c)));
      rows.push_back(std::move(row));
    }
    j["module_presentation"] = std::move(rows);
    j["signature_zero"] = s.signature_zero;
  }
  if (k.meta().ribbon) j["ribbon"] = *k.meta().ribbon;
  if (k.meta().doubly_slice) j["doubly_slice"] = *k.meta().doubly_slice;
  if (k.meta().crossing_number) j["crossing_number"] = *k.meta().crossing_number;
  return j;
}

KnotDescriptor knot_from_json(const json& j) {
  const std::string name = j.contains("name") ? j.at("name").get<std::string>() : "unnamed";
  const KnotMeta meta = meta_from_json(j);
  if (j.contains("seifert")) {
    const json& rows = j.at("seifert");
    const std::size_t n = rows.size();
    IntMat v(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n)
        throw std::invalid_argument("seifert matrix rows must form a square matrix");
      for (std::size_t c = 0; c < n; ++c) v.at(i, c) = Integer(rows[i][c].get<long>());
    }
    return KnotDescriptor(name, SeifertMatrix(std::move(v)), meta);
  }
  if (j.contains("module_presentation")) {
    const json& rows = j.at("module_presentation");
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    PolyMatrix p(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (!rows[i].is_array() || rows[i].size() != c)
        throw std::invalid_argument("module presentation rows must have equal length");
      for (std::size_t q = 0; q < c; ++q) p.at(i, q) = poly_from_json(rows[i][q]);
    }
    const bool sz = j.contains("signature_zero") && j.at("signature_zero").get<bool>();
    return KnotDescriptor(name, ModuleSurrogate{std::move(p), sz}, meta);
  }
  throw std::invalid_argument("knot JSON needs a \"seifert\" or \"module_presentation\" key");
}

json profile_to_json(const SignatureProfile& p) {
  json jumps = json::array();
  for (const auto& jp : p.jumps) {
    json one = json::object();
    one["abscissa"] = certified_to_json(jp.abscissa);
    one["angle"] = certified_to_json(jp.angle);
    if (jp.cyclotomic_index) one["cyclotomic_index"] = *jp.cyclotomic_index;
    jumps.push_back(std::move(one));
  }
  json j = json::object();
  j["jumps"] = std::move(jumps);
  j["arc_values"] = p.arc_values;
  j["rho0"] = certified_to_json(p.rho0);
  j["max_abs"] = p.max_abs;
  return j;
}

json family_to_json(const FamilyDescriptor& f) {
  json inf = json::object();
  inf["axis_primary"] = poly_to_json(f.infection.axis_primary);
  inf["axis_count"] = f.infection.axis_count;
  inf["companion"] = knot_to_json(f.infection.companion);
  inf["companion_rho0"] = certified_to_json(f.infection.companion_rho0);
  json j = json::object();
  j["pattern"] = knot_to_json(f.pattern);
  j["copies"] = f.copies;
  j["infection"] = std::move(inf);
  j["pattern_slack_per_copy"] = certified_to_json(f.pattern_slack_per_copy);
  j["seifert_level"] = knot_to_json(f.seifert_level);
  return j;
}

FamilyDescriptor family_from_json(const json& j) {
  const json& ji = j.at("infection");
  InfectionDatum infection{poly_from_json(ji.at("axis_primary")),
                           ji.at("axis_count").get<unsigned>(),
                           knot_from_json(ji.at("companion")),
                           certified_from_json(ji.at("companion_rho0"))};
  FamilyDescriptor f{knot_from_json(j.at("pattern")), j.at("copies").get<unsigned>(),
                     std::move(infection), certified_from_json(j.at("pattern_slack_per_copy")),
                     knot_from_json(j.at("seifert_level"))};
  validate_family(f);
  return f;
}

namespace {

Cmp cmp_from_name(const std::string& s) {
  if (s == "true") return Cmp::True;
  if (s == "false") return Cmp::False;
  if (s == "inconclusive") return Cmp::Inconclusive;
  throw std::invalid_argument("unknown comparison result: " + s);
}

CertStatus status_from_name(const std::string& s) {
  if (s == "pass") return CertStatus::Pass;
  if (s == "fail") return CertStatus::Fail;
  if (s == "inconclusive") return CertStatus::Inconclusive;
  throw std::invalid_argument("unknown certificate status: " + s);
}

}  // namespace

json certificate_to_json(const Certificate& c) {
  json checks = json::array();
  for (const auto& check : c.checks) {
    json one = json::object();
    one["description"] = check.description;
    one["lhs"] = certified_to_json(check.lhs);
    one["relation"] = check.relation;
    one["rhs"] = certified_to_json(check.rhs);
    one["result"] = cmp_name(check.result);
    checks.push_back(std::move(one));
  }
  json j = json::object();
  j["claim"] = c.claim;
  j["int_inputs"] = c.int_inputs;
  j["text_inputs"] = c.text_inputs;
  j["checks"] = std::move(checks);
  j["conditional_on"] = c.conditional_on;
  j["status"] = status_name(c.status);
  j["conclusion"] = c.conclusion;
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.claim = j.at("claim").get<std::string>();
  for (auto it = j.at("int_inputs").begin(); it != j.at("int_inputs").end(); ++it)
    c.int_inputs[it.key()] = it.value().get<long>();
  for (auto it = j.at("text_inputs").begin(); it != j.at("text_inputs").end(); ++it)
    c.text_inputs[it.key()] = it.value().get<std::string>();
  for (const json& check : j.at("checks")) {
    c.checks.push_back({check.at("description").get<std::string>(),
                        certified_from_json(check.at("lhs")),
                        check.at("relation").get<std::string>(),
                        certified_from_json(check.at("rhs")),
                        cmp_from_name(check.at("result").get<std::string>())});
  }
  for (const json& a : j.at("conditional_on")) c.conditional_on.push_back(a.get<std::string>());
  c.status = status_from_name(j.at("status").get<std::string>());
  c.conclusion = j.at("conclusion").get<std::string>();
  return c;
}

json bounds_to_json(const BoundsReport& r) {
  json j = json::object();
  j["name"] = r.name;
  j["has_seifert"] = r.has_seifert;
  if (r.g3_upper) j["g3_upper"] = *r.g3_upper;
  if (r.gds_upper) j["gds_upper"] = *r.gds_upper;
  j["gds_lower_signature"] = r.gds_lower_signature;
  j["min_generators"] = r.min_gens;
  j["superslice_b2_0"] = r.superslice_b2_0;
  j["arf"] = r.arf_value;
  j["stably_doubly_slice"] = r.stably_doubly_slice;
  if (r.sn_upper) j["sn_upper"] = *r.sn_upper;
  j["dsn_defined"] = r.dsn_defined;
  j["annotations"] = r.annotations;
  j["consistent"] = r.consistent;
  return j;
}

KnotDescriptor parse_descriptor(const std::string& arg) {
  const std::size_t first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{')
    return knot_from_json(json::parse(arg));
  try {
    return builtin_knot(arg);
  } catch (const std::out_of_range&) {
    // fall through to the file interpretation
  }
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("not a built-in knot and not a readable file: " + arg);
  json j;
  in >> j;
  return knot_from_json(j);
}

std::string input_digest(const std::string& canonical_bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

namespace {

// Report envelope shared by all subcommands: version, digest of the
// canonicalized (parsed-and-reserialized) input, the literal command, and one
// payload section named by kind.
void emit_report(std::ostream& out, const std::vector<std::string>& args,
                 const std::string& section, const json& input, const json& payload) {
  json report = json::object();
  report["tool_version"] = tool_version;
  report["input_digest"] = input_digest(input.dump());
  std::string command;
  for (const auto& a : args) {
    if (!command.empty()) command += ' ';
    command += a;
  }
  report["command"] = command;
  report[section] = payload;
  out << report.dump(2) << "\n";
}

// "p/q" gives an exact slack, "lo:hi" an interval one.
CertifiedValue parse_slack(const std::string& s) {
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos) return CertifiedValue::exact(parse_rational(s));
  return CertifiedValue::interval(parse_rational(s.substr(0, colon)),
                                  parse_rational(s.substr(colon + 1)));
}

int status_exit_code(CertStatus s) {
  switch (s) {
    case CertStatus::Pass: return 0;
    case CertStatus::Fail: return 2;
    default: return 3;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact knot invariants and embedding-obstruction certificates"};
  app.name("knotcert");

  std::string enclosure_width;
  unsigned cyclotomic_bound = ProfileOptions{}.cyclotomic_bound;
  app.add_option("--enclosure-width", enclosure_width,
                 "target rational width for interval enclosures, e.g. 1/1000000");
  app.add_option("--cyclotomic-bound", cyclotomic_bound,
                 "divide out cyclotomic factors Phi_d for d up to this bound");
  app.require_subcommand(1);

  std::string knot_arg;
  auto* inv = app.add_subcommand("invariants",
                                 "Alexander polynomial, module, signature profile, parity");
  inv->fallthrough();  // accept the global tuning flags after the subcommand too
  inv->add_option("knot", knot_arg, "built-in name, inline JSON, or file path");

  auto* bounds = app.add_subcommand("bounds", "assembled upper and lower bounds for one knot");
  bounds->fallthrough();
  bounds->add_option("knot", knot_arg, "built-in name, inline JSON, or file path");

  unsigned max_n = 8;
  bool prime_powers_only = false;
  auto* covers = app.add_subcommand("covers", "branched cyclic cover homology orders");
  covers->fallthrough();
  covers->add_option("--max-n", max_n, "largest cover degree to report");
  covers->add_flag("--prime-powers-only", prime_powers_only,
                   "screen prime-power degrees only and flag nontrivial homology");
  covers->add_option("knot", knot_arg, "built-in name, inline JSON, or file path");

  std::string family_pos, family_opt, slack_arg;
  unsigned opt_g = 0, opt_n = 0, opt_b2 = 0, opt_m = 0;
  auto add_family_flags = [&](CLI::App* cmd) {
    cmd->fallthrough();
    cmd->add_option("kind", family_pos, "thm-c | thm-d | thm-g | dsn");
    cmd->add_option("--family", family_opt, "same as the positional kind");
    cmd->add_option("--g", opt_g, "genus parameter");
    cmd->add_option("--n", opt_n, "second Betti number (thm-c)");
    cmd->add_option("--b2", opt_b2, "second Betti number (thm-g)");
    cmd->add_option("--m", opt_m, "stabilization count (dsn)");
    cmd->add_option("--slack", slack_arg,
                    "per-copy rho slack for thm-d: a rational p/q, or lo:hi for an interval");
  };
  auto* certify = app.add_subcommand("certify", "produce and verify an obstruction certificate");
  add_family_flags(certify);
  auto* construct = app.add_subcommand("construct", "emit a family descriptor as JSON");
  add_family_flags(construct);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    ProfileOptions opts;
    opts.cyclotomic_bound = cyclotomic_bound;
    if (!enclosure_width.empty()) {
      opts.enclosure_width = parse_rational(enclosure_width);
      if (sign(opts.enclosure_width) <= 0)
        throw std::invalid_argument("--enclosure-width must be positive");
    }

    if (inv->parsed() || bounds->parsed() || covers->parsed()) {
      if (knot_arg.empty()) {
        err << "usage error: a knot argument is required\n";
        return 1;
      }
      KnotDescriptor k = parse_descriptor(knot_arg);
      const json input = knot_to_json(k);

      if (inv->parsed()) {
        json payload = json::object();
        payload["name"] = k.name();
        const LaurentPoly delta = alexander_polynomial(k);
        payload["alexander"] = poly_to_json(delta);
        payload["alexander_str"] = delta.str();
        const LambdaModule mod = alexander_module(k);
        payload["module"] = module_to_json(mod);
        payload["min_generators"] = min_generators(mod);
        payload["profile"] = profile_to_json(signature_profile(k, opts));
        payload["arf"] = arf(k);
        payload["stably_doubly_slice"] = is_stably_doubly_slice(k);
        emit_report(out, args, "invariants", input, payload);
        return 0;
      }
      if (bounds->parsed()) {
        emit_report(out, args, "bounds", input, bounds_to_json(inequality_report(k)));
        return 0;
      }
      // covers
      json payload = json::object();
      payload["max_n"] = max_n;
      if (prime_powers_only) {
        const CoverScreen screen = prime_power_cover_screen(k, max_n);
        payload["prime_powers_only"] = true;
        payload["all_trivial"] = screen.all_trivial;
        json orders = json::array();
        for (const auto& [n, order] : screen.orders) {
          json one = json::object();
          one["n"] = n;
          one["order"] = order.get_str();
          orders.push_back(std::move(one));
        }
        payload["orders"] = std::move(orders);
      } else {
        json orders = json::array();
        for (unsigned n = 2; n <= max_n; ++n) {
          json one = json::object();
          one["n"] = n;
          const auto order = branched_cover_order(k, n);
          one["finite"] = order.has_value();
          if (order) one["order"] = order->get_str();
          orders.push_back(std::move(one));
        }
        payload["orders"] = std::move(orders);
      }
      emit_report(out, args, "covers", input, payload);
      return 0;
    }

    // certify / construct
    std::string family = family_opt.empty() ? family_pos : family_opt;
    if (!family_pos.empty() && !family_opt.empty() && family_pos != family_opt) {
      err << "usage error: conflicting family arguments\n";
      return 1;
    }
    if (family.empty()) {
      err << "usage error: a family (thm-c | thm-d | thm-g | dsn) is required\n";
      return 1;
    }

    if (construct->parsed()) {
      if (family == "thm-c") {
        const FamilyDescriptor f = thm_c_family(opt_g, opt_n);
        emit_report(out, args, "family", family_to_json(f), family_to_json(f));
      } else if (family == "thm-d") {
        if (slack_arg.empty()) throw std::invalid_argument("thm-d requires --slack");
        const FamilyDescriptor f = thm_d_family(opt_g, parse_slack(slack_arg));
        emit_report(out, args, "family", family_to_json(f), family_to_json(f));
      } else if (family == "thm-g") {
        const KnotDescriptor k = thm_g_family(opt_g, opt_b2);
        emit_report(out, args, "knot", knot_to_json(k), knot_to_json(k));
      } else if (family == "dsn") {
        const FamilyDescriptor f = thm_c_family(0, 2 * opt_m);
        emit_report(out, args, "family", family_to_json(f), family_to_json(f));
      } else {
        err << "usage error: unknown family " << family << "\n";
        return 1;
      }
      return 0;
    }

    Certificate cert;
    json input = json::object();
    if (family == "thm-c") {
      const FamilyDescriptor f = thm_c_family(opt_g, opt_n);
      input["family"] = family_to_json(f);
      input["g"] = opt_g;
      input["b2"] = opt_n;
      cert = gds_X_lower_bound(f, opt_n, opt_g);
    } else if (family == "thm-d") {
      if (slack_arg.empty()) throw std::invalid_argument("thm-d requires --slack");
      const CertifiedValue slack = parse_slack(slack_arg);
      input["g"] = opt_g;
      input["slack"] = certified_to_json(slack);
      cert = thm_d_certificate(opt_g, slack);
    } else if (family == "thm-g") {
      const KnotDescriptor k = thm_g_family(opt_g, opt_b2);
      input["knot"] = knot_to_json(k);
      input["b2"] = opt_b2;
      cert = superslice_lower_bound(k, opt_b2);
    } else if (family == "dsn") {
      const FamilyDescriptor f = thm_c_family(0, 2 * opt_m);
      input["family"] = family_to_json(f);
      input["m"] = opt_m;
      cert = dsn_lower_bound(f, opt_m);
    } else {
      err << "usage error: unknown family " << family << "\n";
      return 1;
    }
    emit_report(out, args, "certificates", input, json::array({certificate_to_json(cert)}));
    return status_exit_code(cert.status);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace knotcert
