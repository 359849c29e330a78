#pragma once

#include "strata/complex.hpp"
#include "strata/filtration.hpp"
#include "strata/matrix.hpp"
#include "strata/zigzag.hpp"

#include "json.hpp"

#include <string>

namespace strata {

// Order-preserving JSON so identical inputs serialize byte-identically.
using json = nlohmann::ordered_json;

// Wraps nlohmann parsing, converting syntax failures to parse_error.
json parse_document(const std::string& text);
// Canonical rendering: two-space indent, trailing newline.
std::string write_document(const json& doc);

// Heights and indices travel as exact strings ("3", "-1/2", "0.25") or
// integral JSON numbers; floating-point numbers are rejected.
rational rational_from_json(const json& v);
json json_of(const rational& x);

// {"vertices": [{"id": n, "height": h}, ...], "simplices": [[ids], ...]};
// listed simplices are closed under faces on load, so emitting every simplex
// round-trips exactly.
simplicial_complex complex_from_json(const json& doc);
json json_of(const simplicial_complex& K);

// {"stages": [complex, ...], "indices": [h, ...]} with matching lengths.
filtration filtration_from_json(const json& doc);
json json_of(const filtration& F);

// Matrices render as {"rows", "cols", "entries"} with exact-entry strings.
json json_of(const matrix& m);

// Bars render as {"degree", "birth_index", "death_index", "multiplicity"}.
json json_of(const barcode& b);

}  // namespace strata
