#pragma once

#include <json.hpp>

#include "tlj/annular.hpp"
#include "tlj/tl.hpp"

namespace tlj {

/// Laurent polynomial as an exponent -> decimal-string map.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

/// {"num": {...}, "den": {...}}
nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

/// {"coeffs": [scalar, ...]} with index = power of t.
nlohmann::json to_json(const TPoly& p);
TPoly tpoly_from_json(const nlohmann::json& j);

/// Canonical form {"size": m, "terms": [{"pairing": [..], "coeff": {...}}]}
/// with terms in the basis order; round-trips bit-exactly.
nlohmann::json to_json(const TLElement& x);
TLElement tl_element_from_json(const nlohmann::json& j);

/// {"schema": 1, "n": .., "basis": [{"matching": [..], "hole_face": ..}..],
///  "entries": [[tpoly ..] ..]}
nlohmann::json gram_to_json(int n);

} // namespace tlj
