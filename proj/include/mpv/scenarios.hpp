#pragma once

#include "mpv/surface.hpp"

#include <cstdint>
#include <variant>

namespace mpv {
namespace scenarios {

// P^2 with two lines C1, C2, alpha = (-1/2, -1/2); the vanishing principal
// value example.
SurfaceConfig example34a();

// P^2 with a rational conic C1, alpha = -1/2; the nonvanishing side.
SurfaceConfig example34b();

struct ChainStage {
    std::string label;
    SurfaceConfig config;
    // Applied to the previous stage (absent on the first).
    std::optional<BlowupCenter> center;
    std::optional<std::string> new_component;
};

using BlowupChain = std::vector<ChainStage>;

// The three-blow-up chain over example34a: OnCurve(C2) -> C3,
// AtDoublePoint(C2, C3) -> C4, OnCurve(C4) -> C5.
BlowupChain figure2_chain();

struct ExceptionalMultiplicity {
    int codim = 2;
    std::vector<std::pair<Rational, std::int64_t>> branches;
    Rational alpha;       // alpha of the exceptional divisor
    Rational coefficient; // alpha - 1
};

// Two tangent branches with coefficients 1/2 and -3/2 (alphas 3/2 and -1/2);
// the exceptional curve acquires multiplicity zero.
ExceptionalMultiplicity figure1_multiplicity();

// P^1 with k = |alphas| points; requires sum(alpha_i - 1) = -2 and every
// alpha_i nonzero (else ConstraintViolated).
StratifiedConfig p1_points(const std::vector<Rational>& alphas);

// k general-position lines in P^2; requires sum(alpha_i - 1) = -3 and every
// alpha_i nonzero.
SurfaceConfig p2_lines(const std::vector<Rational>& alphas);

// Cartesian product with a smooth complete factor of class `factor` and
// dimension dim_factor: every stratum class is multiplied, n grows.
StratifiedConfig product_with(const StratifiedConfig& base, const MotClass& factor,
                              int dim_factor);

enum class Family { p1, p2lines };

// Deterministic-in-seed generator of canonical-degree configurations: the
// emitted config validates, satisfies the family degree constraint exactly,
// and has every alpha nonzero.
StratifiedConfig random_canonical(std::uint64_t seed, Family family, int d_max, int k_max);

using ScenarioResult =
    std::variant<StratifiedConfig, SurfaceConfig, BlowupChain, ExceptionalMultiplicity>;

} // namespace scenarios

// Small deterministic RNG helpers shared by generators and property tests
// (raw mt19937_64 output; avoids distribution objects for cross-platform
// reproducibility).
struct DetRng {
    explicit DetRng(std::uint64_t seed);
    std::uint64_t next();
    // Uniform-ish integer in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi);
    // Nonzero integer in [-bound, bound].
    std::int64_t nonzero(std::int64_t bound);

private:
    std::uint64_t state_;
};

} // namespace mpv
