#pragma once

#include "mpv/ring_elem.hpp"

#include <string_view>

namespace mpv {

// Recursive-descent parser for the expression grammar used in config files and
// produced by the pretty renderer:
//
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := ('+'|'-') factor | power
//   power    := primary ('^' exponent)?
//   primary  := integer | 'L' | 'T' | 'u' | 'v' | '(' expr ')'
//   exponent := ['+'|'-'] integer | '(' ['+'|'-'] integer ['/' integer] ')'
//
// Symbols map to the scaled variables: L = t^m, T = tau^m, u = U^m, v = V^m.
// A fractional exponent requires a coefficient-one monomial base and must land
// on integer scaled exponents (else ScalingError).
RingElem parse_expression(std::string_view text, std::int64_t m);

} // namespace mpv
