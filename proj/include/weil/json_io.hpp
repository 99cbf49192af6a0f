#pragma once

// JSON encodings. Rationals are strings "p/q" in lowest terms; indices are
// 1-based. Objects are nlohmann::json with sorted keys, so dump() is canonical.

#include <string>
#include <string_view>

#include "json.hpp"
#include "weil/chart_forms.hpp"
#include "weil/chern_weil.hpp"
#include "weil/equivariant.hpp"
#include "weil/liealg.hpp"
#include "weil/weil_algebra.hpp"

namespace weil {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Json scalar_to_json(const Rational& r);
Json scalar_to_json(const GaussianRational& z);
/// Accepts a string "p/q" or an integer.
Rational rational_from_json(const Json& j);

/// {"dim": n, "name": ..., "brackets": [{"i":1,"j":2,"k":3,"c":"1"}, ...]},
/// only i < j stored.
Json to_json(const LieAlgebra& l);
/// Parses and validates; axiom violations are reported as DomainError.
LieAlgebra algebra_from_json(const Json& j);
/// A built-in name or an algebra object.
LieAlgebra algebra_from_spec(const Json& j);

/// [{"ext":[2,3],"sym":[1,0,0],"c":"1/2"}, ...]
Json to_json(const WeilElement& a);
WeilElement weil_from_json(const Json& j, int n);

/// {"dim": m, "terms": [{"dx":[1,2],"mono":[1,0,0],"c":"2/3"}, ...]}
template <class K>
Json to_json(const ChartForm<K>& f);
RationalForm form_from_json(const Json& j);
ChartForm<GaussianRational> complex_form_from_json(const Json& j);

/// {"algebra": {...}, "chart_dim": m, "components": [form, ...]}
template <class K>
Json to_json(const LieValuedForm<K>& a);
Connection connection_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// List of m x m matrices, one per basis vector.
LinearAction action_from_json(const Json& j, const LieAlgebra& l);

/// {"kind": "constant"|"unipotent", "size": r, "chart_dim": m,
///  "entries": [[poly, ...], ...]} with polynomial entries given as forms.
GaugeTransform<GaussianRational> gauge_from_json(const Json& j);

/// FNV-1a 64, lowercase hex.
std::string fnv1a_hex(std::string_view data);

}  // namespace weil
