#ifndef QUADDEC_SERIALIZE_HPP
#define QUADDEC_SERIALIZE_HPP

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "quaddec/coeffs.hpp"
#include "quaddec/gqd.hpp"
#include "quaddec/study.hpp"

namespace quaddec {

using json = nlohmann::json;

// Scalars and polynomials: "n/d" strings and arrays of them, ascending powers.
json to_json(const Rational& r);
json to_json(const Poly& p);
json to_json(const std::vector<Rational>& v);
json to_json(const std::vector<Poly>& v);
json to_json(const Params& params);
json to_json(const QuadMap& map);
json to_json(const RecurrencePrefix& rc);

/// {"n,m": "(wₙ)ₘ", ...}.
json to_json(const MomentTable& t);

Rational rational_from_json(const json& j);
Poly poly_from_json(const json& j);
std::vector<Poly> polys_from_json(const json& j);

json to_json(const SecondaryPattern& s);
json to_json(const ComponentVerdict& v);
json to_json(const CriterionVerdict& v);

/// {"P","R","a","b","depth","extended","flags"}; "a" starts at a₀. The
/// extended streams are present when `ec` is given: beta entries n = 0 …
/// depth − 1, the rest k = 1 … depth − 1.
json to_json(const GqdResult& res, const ExtendedCoeffs* ec = nullptr);

/// Inverse of to_json(GqdResult); the extended block and flags are ignored.
GqdResult gqd_from_json(const json& j);

json to_json(const StudyReport& r);
json to_json(const VerifyReport& r);
json to_json(const MomentsReport& m);

/// Coefficient file: {"beta": [...], "gamma": [...]} or
/// {"beta": [...], "chi": [[...], ...]}. Throws ParseError.
using CoeffFile = std::variant<RecurrencePrefix, StructureTable>;

CoeffFile parse_coeff_file(const json& j);

/// Error payload {"error": {"kind", "message", and "coefficient"/"index" when known}}.
json error_json(const std::string& kind, const std::string& message);

} // namespace quaddec

#endif
