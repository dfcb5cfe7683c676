#pragma once

#include <string>

#include "disknorm/function.hpp"

namespace disknorm {

// Wire formats (nlohmann::json underneath):
//   series:   {"order": N, "coeffs": [[re, im], ...]}     degree 0 first
//   blaschke: {"zeros": [[re, im], ...], "rotation": t, "m": m}
//             plus "zero": true for the zero function
//   function: {"kind": "f0"|"g", "lambda"/"beta": v, "phi": {...}, "series": {...}}
//             or {"kind": "series", "series": {...}}
// Doubles round-trip exactly (shortest-representation printing).

std::string series_to_json(const PowerSeries& s, int indent = 2);
PowerSeries series_from_json(const std::string& text);

std::string blaschke_to_json(const BlaschkeDescriptor& d, int indent = 2);
BlaschkeDescriptor blaschke_from_json(const std::string& text);

std::string function_to_json(const FunctionHandle& f, int indent = 2);

// Accepts the "f0", "g" and "series" kinds. Generated kinds are rebuilt from
// their Schwarz function at the stored series order (or `order` when given).
FunctionHandle function_from_json(const std::string& text, int order = 0);

}  // namespace disknorm
