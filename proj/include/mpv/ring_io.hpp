#pragma once

#include "mpv/ring_elem.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace mpv {

enum class RenderStyle { pretty, machine };

// Pretty style prints in the unscaled L/T/u/v notation with rational exponents,
// e.g. "-(L + L^(1/2) + 1)/L^(3/2)" for m = 2; the output parses back (via the
// expression grammar) to an equal element. Machine style is the exact term
// list as JSON.
std::string render(const RingElem& x, std::int64_t m, RenderStyle style = RenderStyle::pretty);

// The pretty sum form of a single Laurent polynomial ("L^2 - L", "0").
std::string render_poly(const LaurentPoly& p, std::int64_t m);

nlohmann::json machine_json(const RingElem& x, std::int64_t m);

} // namespace mpv
