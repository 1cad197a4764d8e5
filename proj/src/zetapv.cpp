#include "mpv/zetapv.hpp"

#include "mpv/errors.hpp"

#include <algorithm>
#include <map>

namespace mpv {

namespace {

std::int64_t scaled_or_throw(const Rational& r, std::int64_t m, const std::string& what) {
    auto s = scaled_integer(r, m);
    if (!s) throw ScalingError(what + " denominator does not divide the scaling integer m");
    return *s;
}

// x^e - 1 for the factor denominators.
LaurentPoly monomial_minus_one(const ExpVec& e) {
    LaurentPoly p = LaurentPoly::monomial(Rational(1), e);
    p.add_term(kZeroExp, Rational(-1));
    return p;
}

// L - 1 (motivic) or uv - 1 (hodge), in scaled variables.
LaurentPoly unit_minus_one(Realization r, std::int64_t m) {
    ExpVec e = kZeroExp;
    if (r == Realization::motivic) {
        at(e, Var::t) = m;
    } else {
        at(e, Var::U) = m;
        at(e, Var::V) = m;
    }
    return monomial_minus_one(e);
}

// L^k (motivic) or (uv)^k (hodge) as an exponent vector, k in units of 1/m.
ExpVec unit_power(Realization r, std::int64_t scaled_k) {
    ExpVec e = kZeroExp;
    if (r == Realization::motivic) {
        at(e, Var::t) = scaled_k;
    } else {
        at(e, Var::U) = scaled_k;
        at(e, Var::V) = scaled_k;
    }
    return e;
}

struct Factor {
    LaurentPoly num;
    LaurentPoly den;
};

// sum_I [E_I°] prod_{i in I} num_i/den_i, assembled over the common
// denominator prod_i den_i so only one normalization happens at the end.
RingElem stratified_sum(const StratifiedConfig& c, Realization r,
                        const std::map<std::string, Factor>& factors,
                        const RingElem& prefactor) {
    LaurentPoly common_den = LaurentPoly::constant(1);
    for (const auto& [id, f] : factors) common_den = common_den * f.den;
    LaurentPoly total;
    for (const auto& [subset, cls] : c.open_strata) {
        LaurentPoly term = cls.get(r);
        for (const auto& [id, f] : factors)
            term = term * (subset_contains(subset, id) ? f.num : f.den);
        total += term;
    }
    return prefactor * RingElem(std::move(total), std::move(common_den));
}

RingElem lefschetz_prefactor(Realization r, int n, std::int64_t m, bool normalized) {
    if (!normalized) return RingElem::constant(1);
    return RingElem::monomial(Rational(1), unit_power(r, -static_cast<std::int64_t>(n) * m));
}

void require_no_log_poles(const StratifiedConfig& c) {
    auto poles = log_poles(c);
    if (!poles.empty()) throw LogarithmicPole(poles);
}

} // namespace

ZetaFunction zeta(const StratifiedConfig& c, Realization r) {
    std::map<std::string, Factor> factors;
    for (const auto& comp : c.components) {
        Rational nu = 1, N = 0;
        if (comp.has_resolution()) {
            nu = comp.resolution->first;
            N = comp.resolution->second;
        } else {
            // Def-2 convention: exponents 1 + (alpha_i - 1) s.
            nu = 1;
            N = comp.effective_alpha() - 1;
        }
        std::int64_t snu = scaled_or_throw(nu, c.m, "nu of '" + comp.id + "'");
        std::int64_t sN = scaled_or_throw(N, c.m, "N of '" + comp.id + "'");
        // L^{nu + sN} = t^{m nu} tau^{-m N}.
        ExpVec den_exp = unit_power(r, snu);
        at(den_exp, Var::tau) = -sN;
        factors.emplace(comp.id, Factor{unit_minus_one(r, c.m), monomial_minus_one(den_exp)});
    }
    RingElem expr = stratified_sum(c, r, factors, lefschetz_prefactor(r, c.n, c.m, true));
    return ZetaFunction{std::move(expr), c.n, c.m, r};
}

PvValue pv(const StratifiedConfig& c, Realization r, bool normalized) {
    require_no_log_poles(c);
    std::map<std::string, Factor> factors;
    for (const auto& comp : c.components) {
        std::int64_t sa =
            scaled_or_throw(comp.effective_alpha(), c.m, "alpha of '" + comp.id + "'");
        factors.emplace(comp.id, Factor{unit_minus_one(r, c.m),
                                        monomial_minus_one(unit_power(r, sa))});
    }
    RingElem expr = stratified_sum(c, r, factors, lefschetz_prefactor(r, c.n, c.m, normalized));
    return PvValue{std::move(expr), c.n, c.m, r, normalized};
}

PvValue pv_from_resolution(const StratifiedConfig& c, Realization r, bool normalized) {
    StratifiedConfig alpha_form = c;
    for (auto& comp : alpha_form.components) {
        if (!comp.has_resolution())
            throw MissingResolutionData("component '" + comp.id + "' carries no (nu, N) data");
        comp.alpha = comp.effective_alpha();
        comp.resolution.reset();
    }
    PvValue via_alpha = pv(alpha_form, r, normalized);
    PvValue direct = pv(c, r, normalized);
    if (!direct.expr.equals(via_alpha.expr))
        throw InternalCheckFailure("pv_from_resolution: alpha = nu + N route disagrees");
    return direct;
}

ZetaFunction hodge_def1_zeta(const StratifiedConfig& c) {
    std::map<std::string, Factor> factors;
    for (const auto& comp : c.components) {
        std::int64_t sa =
            scaled_or_throw(comp.effective_alpha(), c.m, "alpha of '" + comp.id + "'");
        // (uv - 1) T / ((uv)^{alpha} - T), with T = tau^m.
        ExpVec tau_m = kZeroExp;
        at(tau_m, Var::tau) = c.m;
        LaurentPoly num = unit_minus_one(Realization::hodge, c.m).shifted(tau_m);
        LaurentPoly den = LaurentPoly::monomial(Rational(1), unit_power(Realization::hodge, sa));
        den.add_term(tau_m, Rational(-1));
        factors.emplace(comp.id, Factor{std::move(num), std::move(den)});
    }
    RingElem expr = stratified_sum(c, Realization::hodge, factors,
                                   lefschetz_prefactor(Realization::hodge, c.n, c.m, true));
    return ZetaFunction{std::move(expr), c.n, c.m, Realization::hodge};
}

PvValue hodge_def1(const StratifiedConfig& c, bool normalized) {
    require_no_log_poles(c);
    ZetaFunction z = hodge_def1_zeta(c);
    RingElem expr = z.expr.substituted(Var::tau, kZeroExp); // lim_{T->1}, here plain evaluation
    if (!normalized)
        expr = expr * RingElem::monomial(
                          Rational(1), unit_power(Realization::hodge,
                                                  static_cast<std::int64_t>(c.n) * c.m));
    return PvValue{std::move(expr), c.n, c.m, Realization::hodge, normalized};
}

RingElem converging_integral(const StratifiedConfig& c, std::int64_t s) {
    std::vector<std::string> divergent;
    for (const auto& comp : c.components)
        if (comp.effective_alpha() + s <= 0) divergent.push_back(comp.id);
    if (!divergent.empty()) {
        std::string msg = "integral diverges (alpha_i + s <= 0) on:";
        for (const auto& id : divergent) msg += " " + id;
        throw NotConvergent(msg);
    }
    std::map<std::string, Factor> factors;
    for (const auto& comp : c.components) {
        std::int64_t sa =
            scaled_or_throw(comp.effective_alpha(), c.m, "alpha of '" + comp.id + "'");
        ExpVec uv_neg_s = unit_power(Realization::hodge, -s * c.m);
        LaurentPoly num = unit_minus_one(Realization::hodge, c.m).shifted(uv_neg_s);
        LaurentPoly den = LaurentPoly::monomial(Rational(1), unit_power(Realization::hodge, sa));
        den.add_term(uv_neg_s, Rational(-1));
        factors.emplace(comp.id, Factor{std::move(num), std::move(den)});
    }
    return stratified_sum(c, Realization::hodge, factors,
                          lefschetz_prefactor(Realization::hodge, c.n, c.m, true));
}

PvValue alt_zeta_pv(const StratifiedConfig& c, const Rational& a, bool normalized) {
    require_no_log_poles(c);
    for (const auto& comp : c.components)
        if (a + comp.effective_alpha() <= 0)
            throw InadmissibleShift("shift a = " + rational_string(a) +
                                    " is not admissible on '" + comp.id +
                                    "' (a + alpha <= 0)");
    std::int64_t sa_shift = scaled_or_throw(a, c.m, "shift a");
    std::map<std::string, Factor> factors;
    for (const auto& comp : c.components) {
        std::int64_t salpha =
            scaled_or_throw(comp.effective_alpha(), c.m, "alpha of '" + comp.id + "'");
        // (uv - 1) / ((uv)^{a + alpha} (uv)^{s a} - 1), with (uv)^{s a} = tau^{-m a}.
        ExpVec den_exp = unit_power(Realization::hodge, sa_shift + salpha);
        at(den_exp, Var::tau) = -sa_shift;
        factors.emplace(comp.id, Factor{unit_minus_one(Realization::hodge, c.m),
                                        monomial_minus_one(den_exp)});
    }
    RingElem z = stratified_sum(c, Realization::hodge, factors,
                                lefschetz_prefactor(Realization::hodge, c.n, c.m, normalized));
    // s = -1 means T = uv, i.e. tau = UV.
    ExpVec uv = kZeroExp;
    at(uv, Var::U) = 1;
    at(uv, Var::V) = 1;
    RingElem expr = z.substituted(Var::tau, uv);
    return PvValue{std::move(expr), c.n, c.m, Realization::hodge, normalized};
}

PvValue duality_involution(const PvValue& x) {
    if (!x.expr.is_tau_free())
        throw Error("duality involution applies to tau-free values only");
    PvValue out = x;
    out.expr = x.expr.inverted_variables();
    return out;
}

std::vector<std::string> log_poles(const StratifiedConfig& c) {
    std::vector<std::string> out;
    for (const auto& comp : c.components)
        if (comp.effective_alpha() == 0) out.push_back(comp.id);
    return out;
}

std::vector<std::string> unit_components(const StratifiedConfig& c) {
    std::vector<std::string> out;
    for (const auto& comp : c.components)
        if (comp.effective_alpha() == 1) out.push_back(comp.id);
    return out;
}

StratifiedConfig delete_unit_components(const StratifiedConfig& c,
                                        const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
        const ComponentData* comp = c.find_component(id);
        if (!comp) throw NotUnitComponent("'" + id + "' is not a component of the configuration");
        if (comp->effective_alpha() != 1)
            throw NotUnitComponent("component '" + id + "' has alpha = " +
                                   rational_string(comp->effective_alpha()) + ", not 1");
    }
    StratifiedConfig out;
    out.n = c.n;
    out.m = c.m;
    for (const auto& comp : c.components)
        if (std::find(ids.begin(), ids.end(), comp.id) == ids.end())
            out.components.push_back(comp);
    for (const auto& [subset, cls] : c.open_strata) {
        Subset reduced;
        for (const auto& id : subset)
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) reduced.push_back(id);
        auto it = out.open_strata.find(reduced);
        if (it == out.open_strata.end())
            out.open_strata.emplace(std::move(reduced), cls);
        else
            it->second = it->second + cls;
    }
    // Merged sums may cancel to zero; zero classes are never stored.
    for (auto it = out.open_strata.begin(); it != out.open_strata.end();)
        it = it->second.is_zero() ? out.open_strata.erase(it) : std::next(it);
    return out;
}

FunctionalEquationReport functional_equation_check(const ClosedStrataInput& cs,
                                                   const std::vector<Rational>& alphas) {
    if (alphas.size() != cs.component_ids.size())
        throw SchemaError("functional equation check needs one alpha per component");
    StratifiedConfig c;
    c.n = cs.n;
    c.m = cs.m;
    for (std::size_t i = 0; i < cs.component_ids.size(); ++i)
        c.components.push_back(ComponentData::with_alpha(cs.component_ids[i], alphas[i]));
    c.open_strata = open_from_closed(cs);

    FunctionalEquationReport report;
    report.pv_unnormalized = pv(c, Realization::motivic, /*normalized=*/false);
    report.dual = report.pv_unnormalized.expr.inverted_variables();
    report.expected =
        RingElem::monomial(Rational(1), unit_power(Realization::motivic,
                                                   -static_cast<std::int64_t>(c.n) * c.m)) *
        report.pv_unnormalized.expr;
    report.holds = report.dual.equals(report.expected);
    report.note = report.holds
                      ? "D(PVu) = L^{-n} PVu holds on the unnormalized value; equivalently "
                        "D(PV) = L^{+n} PV for the normalized one"
                      : "D(PVu) = L^{-n} PVu FAILS on the unnormalized value";
    return report;
}

RingElem specialize_uv_to_l(const RingElem& x) {
    auto map_poly = [](const LaurentPoly& p) {
        LaurentPoly out;
        for (const auto& [e, c] : p.terms()) {
            if (at(e, Var::U) != at(e, Var::V))
                throw Error("value does not depend on the product uv only");
            ExpVec image = e;
            at(image, Var::t) += at(e, Var::U);
            at(image, Var::U) = 0;
            at(image, Var::V) = 0;
            out.add_term(image, c);
        }
        return out;
    };
    return RingElem(map_poly(x.num()), map_poly(x.den()));
}

} // namespace mpv
