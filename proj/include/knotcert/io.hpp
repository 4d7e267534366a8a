#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotcert/certify.hpp"

namespace knotcert {

// JSON serialization.  Schema conventions, used uniformly: every rational
// serializes as the decimal string "num/den" (lossless for any size), Laurent
// polynomials as { "<exponent>": "num/den" } objects, certified values as
// {"exact": "..."} or {"interval": ["lo", "hi"]}.  nlohmann::json keeps
// object keys sorted, so dumps are deterministic.

nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json certified_to_json(const CertifiedValue& v);
CertifiedValue certified_from_json(const nlohmann::json& j);

nlohmann::json module_to_json(const LambdaModule& m);
LambdaModule module_from_json(const nlohmann::json& j);

// Knot schema: {"name": ..., "seifert": [[int]]} or {"name": ...,
// "module_presentation": [[poly]], "signature_zero": bool}, plus the optional
// metadata keys "ribbon", "doubly_slice", "crossing_number".
nlohmann::json knot_to_json(const KnotDescriptor& k);
KnotDescriptor knot_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const SignatureProfile& p);

nlohmann::json family_to_json(const FamilyDescriptor& f);
// Parsing re-runs every construction invariant (validate_family); malformed
// or dishonest descriptors are rejected.
FamilyDescriptor family_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
// Structural parse only; callers decide whether to reverify().
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json bounds_to_json(const BoundsReport& r);

// Accepts a built-in name, an inline JSON object (first non-space byte '{'),
// or a path to a JSON file.
KnotDescriptor parse_descriptor(const std::string& arg);

// FNV-1a 64-bit digest of the canonicalized bytes, rendered "fnv1a:<16 hex>".
std::string input_digest(const std::string& canonical_bytes);

/// The command-line surface.  args excludes the program name.  Writes one
/// JSON report to `out`, diagnostics to `err`.  Exit codes: 0 success,
/// 1 usage/input error, 2 a certificate failed, 3 a certificate was
/// inconclusive at the current precision.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotcert
