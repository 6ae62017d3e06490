#pragma once

#include <falg/forests.hpp>
#include <falg/hilbert.hpp>
#include <falg/poly.hpp>
#include <falg/recovery.hpp>

#include <json.hpp>

namespace falg {

// Polynomials serialize as a list of [exponent..., coefficient-as-string]
// entries in ascending exponent order; readers also accept numeric
// coefficients.
nlohmann::json poly_to_json(const Poly1& p);
nlohmann::json poly_to_json(const LaurentPoly1& p);
nlohmann::json poly_to_json(const Poly2& p);
Poly1 poly1_from_json(const nlohmann::json& j);
LaurentPoly1 laurent1_from_json(const nlohmann::json& j);
Poly2 poly2_from_json(const nlohmann::json& j);

// {"t": t, "dims": [...]}; dims entries are numbers when they fit in 64 bits
// and decimal strings otherwise.
nlohmann::json hilbert_to_json(const HilbertFunction& h);
HilbertFunction hilbert_from_json(const nlohmann::json& j);

// {"v": v, "e": e, "c": c, "counts": [[a, b, N], ...]}
nlohmann::json activity_table_to_json(const ActivityTable& t);
ActivityTable activity_table_from_json(const nlohmann::json& j);

// [[a, b, N], ...]
nlohmann::json counts_to_json(const RecoveredCounts& rc);
RecoveredCounts counts_from_json(const nlohmann::json& j);

}  // namespace falg
