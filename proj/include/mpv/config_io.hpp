#pragma once

#include "mpv/stratconfig.hpp"
#include "mpv/surface.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>

namespace mpv {

// A parsed configuration document. Every document yields a SurfaceConfig
// (named points empty and the surface-only invariants unchecked when n != 2);
// closed strata are carried alongside when present.
struct ParsedDocument {
    SurfaceConfig config;
    std::optional<ClosedStrataInput> closed;
};

// Schema:
//   {
//     "dimension": n, "denominator": m,
//     "components": [{"id": "C1", "alpha": "-1/2"} | {"id": ..., "nu": "1", "N": "-3/2"}],
//     "strata": [{"subset": ["C1"], "class": {"L": "L", "hodge": "u*v"}}],
//     "points": [{"id": "P", "curves": ["C1","C2"]}],              // optional
//     "closed_strata": [{"subset": [...], "class": {...}, "dim": k}] // optional
//   }
// Fraction-valued fields are strings; class expressions follow the expression
// grammar and must be Laurent polynomials (monomial denominators only).
ParsedDocument parse_config_text(const std::string& text);
ParsedDocument parse_config_file(const std::string& path);

nlohmann::json config_to_json(const SurfaceConfig& c);
std::string config_to_text(const SurfaceConfig& c);

// RingElem with a monomial denominator -> Laurent polynomial (else SchemaError).
LaurentPoly ring_elem_to_laurent(const RingElem& x);

} // namespace mpv
