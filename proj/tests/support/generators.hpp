#pragma once

// Hand-rolled generators for the property tests. Everything is deterministic
// in the seed (DetRng is splitmix64-based).

#include "mpv/scenarios.hpp"
#include "mpv/stratconfig.hpp"
#include "mpv/surface.hpp"

#include <vector>

namespace mpv::testgen {

inline Rational random_rational(DetRng& rng, std::int64_t num_bound, std::int64_t den) {
    return Rational(rng.range(-num_bound, num_bound), den);
}

inline Rational random_nonzero_rational(DetRng& rng, std::int64_t num_bound, std::int64_t den) {
    return Rational(rng.nonzero(num_bound), den);
}

// Random Laurent polynomial over the given variables: up to max_terms terms,
// exponents in [-span, span], small integer-ish rational coefficients.
inline LaurentPoly random_poly(DetRng& rng, const std::vector<Var>& vars, int max_terms,
                               std::int64_t span) {
    LaurentPoly p;
    int terms = static_cast<int>(rng.range(0, max_terms));
    for (int i = 0; i < terms; ++i) {
        ExpVec e = kZeroExp;
        for (Var v : vars) at(e, v) = rng.range(-span, span);
        p.add_term(e, Rational(rng.range(-6, 6), rng.range(1, 3)));
    }
    return p;
}

inline LaurentPoly random_nonzero_poly(DetRng& rng, const std::vector<Var>& vars, int max_terms,
                                       std::int64_t span) {
    while (true) {
        LaurentPoly p = random_poly(rng, vars, max_terms, span);
        if (!p.is_zero()) return p;
    }
}

inline RingElem random_ring_elem(DetRng& rng, const std::vector<Var>& vars, int max_terms = 4,
                                 std::int64_t span = 3) {
    return RingElem(random_poly(rng, vars, max_terms, span),
                    random_nonzero_poly(rng, vars, max_terms, span));
}

// A class polynomial in L (t-exponents multiples of m, here >= 0 like actual
// classes) plus its uv mirror, so both realizations are present and
// consistent.
inline MotClass random_class(DetRng& rng, std::int64_t m, int max_deg = 3) {
    LaurentPoly l, h;
    int deg = static_cast<int>(rng.range(0, max_deg));
    bool nonzero = false;
    for (int k = 0; k <= deg; ++k) {
        std::int64_t c = rng.range(-4, 5);
        if (c == 0) continue;
        nonzero = true;
        ExpVec el = kZeroExp;
        at(el, Var::t) = k * m;
        l.add_term(el, c);
        ExpVec eh = kZeroExp;
        at(eh, Var::U) = k * m;
        at(eh, Var::V) = k * m;
        h.add_term(eh, c);
    }
    if (!nonzero) {
        l.add_term(kZeroExp, 1);
        h.add_term(kZeroExp, 1);
    }
    return MotClass::from_both(std::move(l), std::move(h));
}

struct ConfigOptions {
    int max_components = 4;
    int max_dim = 3;
    std::int64_t max_den = 4;
    bool resolution_form = false; // (nu, N) instead of alpha
    bool nonzero_alpha = true;    // keep alpha (or nu+N) away from 0
};

// Random stratified configuration with both realizations on every stratum.
inline StratifiedConfig random_config(DetRng& rng, const ConfigOptions& opt = {}) {
    StratifiedConfig c;
    c.m = rng.range(1, opt.max_den);
    int k = static_cast<int>(rng.range(0, opt.max_components));
    c.n = static_cast<int>(rng.range(std::max(1, std::min(k, 2)), opt.max_dim));
    for (int i = 0; i < k; ++i) {
        std::string id = "E" + std::to_string(i + 1);
        if (opt.resolution_form) {
            Rational nu = Rational(rng.range(0, 3 * c.m), c.m) + 1; // nu >= 1
            Rational N(rng.range(-3 * c.m, 3 * c.m), c.m);
            if (opt.nonzero_alpha && nu + N == 0) N += 1;
            c.components.push_back(ComponentData::with_resolution(id, nu, N));
        } else {
            Rational a = opt.nonzero_alpha ? random_nonzero_rational(rng, 3 * c.m, c.m)
                                           : random_rational(rng, 3 * c.m, c.m);
            c.components.push_back(ComponentData::with_alpha(id, a));
        }
    }
    // Sparse strata: ambient plus a random selection of subsets.
    c.open_strata.emplace(Subset{}, random_class(rng, c.m));
    for (int i = 0; i < k; ++i)
        if (rng.range(0, 3) > 0)
            c.open_strata.emplace(make_subset({c.components[i].id}), random_class(rng, c.m));
    if (c.n >= 2) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (rng.range(0, 2) == 0)
                    c.open_strata.emplace(
                        make_subset({c.components[i].id, c.components[j].id}),
                        MotClass::constant(rng.range(1, 5)));
    }
    return c;
}

// Random surface configuration (n = 2, pair strata are integer counts).
inline SurfaceConfig random_surface(DetRng& rng, std::int64_t max_den = 4) {
    SurfaceConfig c;
    c.n = 2;
    c.m = rng.range(1, max_den);
    int k = static_cast<int>(rng.range(1, 4));
    for (int i = 0; i < k; ++i)
        c.components.push_back(ComponentData::with_alpha(
            "C" + std::to_string(i + 1), random_nonzero_rational(rng, 3 * c.m, c.m)));
    c.open_strata.emplace(Subset{}, random_class(rng, c.m));
    for (int i = 0; i < k; ++i)
        c.open_strata.emplace(make_subset({c.components[i].id}), random_class(rng, c.m, 1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (rng.range(0, 1) == 0)
                c.open_strata.emplace(make_subset({c.components[i].id, c.components[j].id}),
                                      MotClass::constant(rng.range(1, 4)));
    return c;
}

} // namespace mpv::testgen
