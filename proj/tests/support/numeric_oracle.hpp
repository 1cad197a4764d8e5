#pragma once

// Independent numeric evaluation of the principal value formula
//   L^{-n} sum_I [E_I°] prod_{i in I} (L-1)/(L^{alpha_i}-1)
// straight from configuration data in plain rational arithmetic, bypassing the
// symbolic engine entirely. Used as the oracle for evaluation tests.

#include "mpv/stratconfig.hpp"

namespace mpv::testgen {

inline Rational numeric_pv_oracle(const StratifiedConfig& c, const Rational& t_value,
                                  bool normalized = true) {
    Rational lefschetz = rational_pow(t_value, c.m);
    Rational acc = 0;
    for (const auto& [subset, cls] : c.open_strata) {
        EvalPoint point{};
        point[static_cast<int>(Var::t)] = t_value;
        Rational term = cls.get(Realization::motivic).evaluate(point);
        for (const auto& id : subset) {
            const ComponentData* comp = c.find_component(id);
            auto sa = scaled_integer(comp->effective_alpha(), c.m);
            term *= (lefschetz - 1) / (rational_pow(t_value, *sa) - 1);
        }
        acc += term;
    }
    if (normalized) acc *= rational_pow(t_value, -c.m * c.n);
    return acc;
}

} // namespace mpv::testgen
