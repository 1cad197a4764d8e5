#pragma once

#include "mpv/stratconfig.hpp"

namespace mpv {

// The zeta function associated to the configuration: in the motivic
// realization an element of the rational-function field in (t, tau) with
// tau^m = T = L^{-s}; in the Hodge realization in (U, V, tau) with
// tau^m = (uv)^{-s}.
struct ZetaFunction {
    RingElem expr;
    int n = 0;
    std::int64_t m = 1;
    Realization realization = Realization::motivic;
};

// A principal value: tau-free, over t (motivic) or U, V (hodge). When
// normalized, the L^{-n} (resp. (uv)^{-n}) prefactor is included.
struct PvValue {
    RingElem expr;
    int n = 0;
    std::int64_t m = 1;
    Realization realization = Realization::motivic;
    bool normalized = true;
};

// L^{-n} sum_I [E_I°] prod_{i in I} (L-1)/(L^{nu_i + s N_i} - 1), with
// L^{nu + sN} encoded as t^{m nu} tau^{-m N}. Components with alpha data use
// the convention nu = 1, N = alpha - 1.
ZetaFunction zeta(const StratifiedConfig& c, Realization r);

// The evaluation of the zeta function at s = 1:
// L^{-n} sum_I [E_I°] prod (L-1)/(L^{alpha_i} - 1). Throws LogarithmicPole
// listing every component with alpha = 0.
PvValue pv(const StratifiedConfig& c, Realization r, bool normalized = true);

// pv on resolution data with alpha := nu + N; cross-checked internally against
// the alpha route. Throws MissingResolutionData when a component carries only
// alpha data.
PvValue pv_from_resolution(const StratifiedConfig& c, Realization r, bool normalized = true);

// The Hodge-level rational function Z(T) = (uv)^{-n} sum H(E_I°) prod
// (uv-1)T/((uv)^{alpha_i} - T), with T = tau^m; evaluating at T = (uv)^{-s}
// recovers the converging integral for s >> 0.
ZetaFunction hodge_def1_zeta(const StratifiedConfig& c);

// Hodge-level definition 1: Z(T) evaluated at T = 1.
PvValue hodge_def1(const StratifiedConfig& c, bool normalized = true);

// The converging motivic integral at Hodge level for integer s with
// alpha_i + s > 0 for all i (else NotConvergent):
// (uv)^{-n} sum H(E_I°) prod (uv-1)(uv)^{-s} / ((uv)^{alpha_i} - (uv)^{-s}).
RingElem converging_integral(const StratifiedConfig& c, std::int64_t s);

// The alternative zeta route through the twisted sheaf: (uv)^{-n} sum H(E_I°)
// prod (uv-1)/((uv)^{a + alpha_i + s a} - 1), evaluated at s = -1. Requires
// a + alpha_i > 0 for all i (else InadmissibleShift).
PvValue alt_zeta_pv(const StratifiedConfig& c, const Rational& a, bool normalized = true);

// The ring involution with L^{1/d} |-> L^{-1/d}: every variable replaced by
// its inverse. Requires a tau-free value.
PvValue duality_involution(const PvValue& x);

// Components with alpha = 0 (where the s = 1 evaluation is undefined).
std::vector<std::string> log_poles(const StratifiedConfig& c);

// Removes the designated components; every stratum class with I containing a
// deleted id is added into the stratum at I minus the deleted ids. Designated
// components must have alpha = 1 exactly (else NotUnitComponent).
StratifiedConfig delete_unit_components(const StratifiedConfig& c,
                                        const std::vector<std::string>& ids);

// Every component of c with alpha = 1.
std::vector<std::string> unit_components(const StratifiedConfig& c);

struct FunctionalEquationReport {
    bool holds = false;
    PvValue pv_unnormalized;
    RingElem dual;     // D(PVu)
    RingElem expected; // L^{-n} PVu
    std::string note;
};

// Checks D(PVu) = L^{-n} PVu on the unnormalized principal value of the
// configuration assembled from closed strata (via Möbius inversion) and the
// supplied alphas, in the motivic realization. Equivalently, the normalized
// value satisfies D(PV) = L^{+n} PV.
FunctionalEquationReport functional_equation_check(const ClosedStrataInput& cs,
                                                   const std::vector<Rational>& alphas);

// Diagonal specialization (UV)^k |-> t^k of a Hodge-side value; defined when
// every term has equal U and V exponents.
RingElem specialize_uv_to_l(const RingElem& x);

} // namespace mpv
