#pragma once

#include "mpv/stratconfig.hpp"

#include <optional>

namespace mpv {

// A named point usable as a blow-up center: on one curve, or a designated
// double point (two curves).
struct NamedPoint {
    std::string id;
    std::vector<std::string> curves;
};

// Dimension-2 specialization: strata of size 2 are nonnegative integer point
// counts, and no stratum has size 3 or more (simple normal crossings on a
// surface).
struct SurfaceConfig : StratifiedConfig {
    std::vector<NamedPoint> named_points;
};

enum class CenterKind { Free, OnCurve, AtDoublePoint };

struct BlowupCenter {
    CenterKind kind = CenterKind::Free;
    std::string a; // OnCurve: the curve; AtDoublePoint: first curve
    std::string b; // AtDoublePoint: second curve

    static BlowupCenter free_point();
    static BlowupCenter on_curve(std::string id);
    static BlowupCenter at_double_point(std::string i, std::string j);
    // "free" | "curve:<id>" | "point:<id>,<id>"
    static BlowupCenter parse(std::string_view text);
    std::string str() const;
};

ValidationReport validate_surface(const SurfaceConfig& c);

// Point blow-up. Multiplicity and strata transformation rules:
//   Free             alpha_new = 2,                 [E_new°] = L+1, [E_∅°] -= 1
//   OnCurve(i)       alpha_new = alpha_i + 1,       [E_new°] = L,   [E_i°] -= 1,
//                                                   count {i,new} = 1
//   AtDoublePoint(i,j) alpha_new = alpha_i+alpha_j, [E_new°] = L-1, count {i,j} -= 1,
//                                                   counts {i,new}, {j,new} += 1
// When every component carries resolution data the new component gets
// (nu, N) = (2, 0), (nu_i + 1, N_i), (nu_i + nu_j, N_i + N_j) respectively.
// total_class gains exactly L.
SurfaceConfig blowup(const SurfaceConfig& c, const BlowupCenter& center, const std::string& new_id);

// alpha of the exceptional divisor of blowing up a point of codimension
// `codim` lying on the given branches with local multiplicities:
// alpha_E = codim + sum m_i (alpha_i - 1).
Rational exceptional_alpha(int codim,
                           const std::vector<std::pair<Rational, std::int64_t>>& branches);

struct InvarianceReport {
    bool before_defined = false;
    bool after_defined = false;
    std::vector<std::string> before_poles;
    std::vector<std::string> after_poles;
    std::optional<bool> equal; // set when both sides are defined
    std::string summary() const;
};

// Whether both principal values are defined and, if so, whether they agree;
// compared in every realization available on both sides.
InvarianceReport invariance_report(const SurfaceConfig& before, const SurfaceConfig& after);

} // namespace mpv
