#pragma once

#include <json.hpp>

#include "fillcurve/analysis.hpp"
#include "fillcurve/bipoly.hpp"
#include "fillcurve/bounds.hpp"
#include "fillcurve/families.hpp"
#include "fillcurve/filling.hpp"
#include "fillcurve/search.hpp"

// JSON forms of the library's values. Elements of prime fields are integers;
// elements of extension fields are coefficient lists over the base field,
// constant term first, as in the text syntax.
namespace fillcurve::io {

using json = nlohmann::ordered_json;

json to_json(const gf::Field& k);
json element_to_json(const gf::Field& k, gf::Elem x);
gf::Elem element_from_json(const gf::Field& k, const json& j);

/// {"bidegree":[a,b],"coeffs":[[c(0,0),...,c(0,b)],...],"field":{...}}
json to_json(const BiPoly& f);
/// Reads the canonical form. The field is taken from `k` when given,
/// otherwise rebuilt from the "field" member.
BiPoly bipoly_from_json(const json& j, const std::optional<gf::Field>& k = std::nullopt);

/// {"text": canonical text, "poly": canonical JSON}
json poly_entry(const BiPoly& f);

json to_json(const Witness& w);
json to_json(const SmoothCertificate& c);
json to_json(const IrreducibilityResult& r);
/// "verified" records whether f K_X + g K_Y reproduces `original`.
json to_json(const Decomposition& d, const BiPoly& original);
json to_json(const FamilyParams& p, const gf::Field& k);
json to_json(const BoundValue& v);
json to_json(const BoundReport& r);
/// Timing is left out unless asked for, so that reports are reproducible.
json to_json(const CensusReport& r, bool timing = false);
json to_json(const ScanTable& t, bool timing = false);

/// Decimal expansion of num/den truncated to `digits` places.
std::string decimal_quotient(std::uint64_t num, std::uint64_t den, unsigned digits = 6);

}  // namespace fillcurve::io
