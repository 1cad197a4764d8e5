#include "mpv/stratconfig.hpp"

#include "mpv/errors.hpp"

#include <algorithm>
#include <set>

namespace mpv {

MotClass MotClass::from_l(LaurentPoly p) {
    MotClass c;
    c.lclass = std::move(p);
    return c;
}

MotClass MotClass::from_hodge(LaurentPoly p) {
    MotClass c;
    c.hodge = std::move(p);
    return c;
}

MotClass MotClass::from_both(LaurentPoly l, LaurentPoly h) {
    MotClass c;
    c.lclass = std::move(l);
    c.hodge = std::move(h);
    return c;
}

MotClass MotClass::constant(const Rational& c) {
    return from_both(LaurentPoly::constant(c), LaurentPoly::constant(c));
}

MotClass MotClass::lefschetz_power(std::int64_t k, std::int64_t m) {
    ExpVec el = kZeroExp;
    at(el, Var::t) = k * m;
    ExpVec eh = kZeroExp;
    at(eh, Var::U) = k * m;
    at(eh, Var::V) = k * m;
    return from_both(LaurentPoly::monomial(Rational(1), el), LaurentPoly::monomial(Rational(1), eh));
}

bool MotClass::has(Realization r) const {
    return r == Realization::motivic ? lclass.has_value() : hodge.has_value();
}

const LaurentPoly& MotClass::get(Realization r) const {
    const auto& slot = r == Realization::motivic ? lclass : hodge;
    if (!slot)
        throw MissingRealization(r == Realization::motivic
                                     ? "stratum class has no L-realization"
                                     : "stratum class has no Hodge realization");
    return *slot;
}

bool MotClass::is_zero() const {
    if (!lclass && !hodge) return true;
    if (lclass && !lclass->is_zero()) return false;
    if (hodge && !hodge->is_zero()) return false;
    return true;
}

namespace {

template <typename Op>
MotClass combine(const MotClass& a, const MotClass& b, Op op) {
    MotClass out;
    if (a.lclass && b.lclass) out.lclass = op(*a.lclass, *b.lclass);
    if (a.hodge && b.hodge) out.hodge = op(*a.hodge, *b.hodge);
    return out;
}

} // namespace

MotClass MotClass::operator+(const MotClass& o) const {
    return combine(*this, o, [](const LaurentPoly& x, const LaurentPoly& y) { return x + y; });
}

MotClass MotClass::operator-(const MotClass& o) const {
    return combine(*this, o, [](const LaurentPoly& x, const LaurentPoly& y) { return x - y; });
}

MotClass MotClass::operator*(const MotClass& o) const {
    return combine(*this, o, [](const LaurentPoly& x, const LaurentPoly& y) { return x * y; });
}

bool MotClass::operator==(const MotClass& o) const {
    return lclass == o.lclass && hodge == o.hodge;
}

ComponentData ComponentData::with_alpha(std::string id, Rational a) {
    ComponentData c;
    c.id = std::move(id);
    c.alpha = std::move(a);
    return c;
}

ComponentData ComponentData::with_resolution(std::string id, Rational nu, Rational N) {
    ComponentData c;
    c.id = std::move(id);
    c.resolution = {std::move(nu), std::move(N)};
    return c;
}

Rational ComponentData::effective_alpha() const {
    if (alpha) return *alpha;
    if (resolution) return resolution->first + resolution->second;
    throw SchemaError("component '" + id + "' carries neither alpha nor resolution data");
}

Subset make_subset(std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool subset_contains(const Subset& sub, const std::string& id) {
    return std::binary_search(sub.begin(), sub.end(), id);
}

bool is_subset_of(const Subset& a, const Subset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

const ComponentData* StratifiedConfig::find_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

bool StratifiedConfig::has_realization(Realization r) const {
    return std::all_of(open_strata.begin(), open_strata.end(),
                       [r](const auto& kv) { return kv.second.has(r); });
}

namespace {

// (UV)^m |-> L on a diagonal Hodge polynomial; nullopt when some term has
// unequal U, V exponents.
std::optional<LaurentPoly> diagonal_hodge_to_l(const LaurentPoly& h) {
    LaurentPoly out;
    for (const auto& [e, c] : h.terms()) {
        if (at(e, Var::t) != 0 || at(e, Var::tau) != 0) return std::nullopt;
        if (at(e, Var::U) != at(e, Var::V)) return std::nullopt;
        ExpVec image = kZeroExp;
        at(image, Var::t) = at(e, Var::U);
        out.add_term(image, c);
    }
    return out;
}

void check_class(const std::string& where, const MotClass& cls, std::int64_t m,
                 ValidationReport& report, bool allow_zero = false) {
    if (!cls.lclass && !cls.hodge) {
        report.findings.push_back({"empty-class", where + ": no realization stored"});
        return;
    }
    if (!allow_zero && cls.is_zero())
        report.findings.push_back({"zero-class", where + ": zero classes must be omitted"});
    if (cls.lclass) {
        for (const auto& [e, c] : cls.lclass->terms()) {
            if (at(e, Var::tau) != 0 || at(e, Var::U) != 0 || at(e, Var::V) != 0) {
                report.findings.push_back({"bad-variable", where + ": L-class uses a variable other than t"});
                break;
            }
            if (at(e, Var::t) % m != 0) {
                report.findings.push_back(
                    {"scaling-mismatch", where + ": L-class exponent not a multiple of m"});
                break;
            }
        }
    }
    if (cls.hodge) {
        for (const auto& [e, c] : cls.hodge->terms()) {
            if (at(e, Var::t) != 0 || at(e, Var::tau) != 0) {
                report.findings.push_back({"bad-variable", where + ": Hodge class uses t or tau"});
                break;
            }
            if (at(e, Var::U) % m != 0 || at(e, Var::V) % m != 0) {
                report.findings.push_back(
                    {"scaling-mismatch", where + ": Hodge class exponent not a multiple of m"});
                break;
            }
            if (at(e, Var::U) < 0 || at(e, Var::V) < 0) {
                report.findings.push_back(
                    {"negative-hodge", where + ": Hodge class has a negative exponent"});
                break;
            }
        }
    }
    // Dual-realization consistency, triggered exactly when the Hodge side
    // depends only on the product uv.
    if (cls.lclass && cls.hodge) {
        if (auto specialized = diagonal_hodge_to_l(*cls.hodge)) {
            if (!(*specialized == *cls.lclass))
                report.findings.push_back(
                    {"realization-mismatch",
                     where + ": Hodge class with (uv)^m -> L differs from the L-class"});
        }
    }
}

std::string subset_label(const Subset& s) {
    if (s.empty()) return "{}";
    std::string out = "{";
    for (const auto& id : s) {
        if (out.size() > 1) out += ",";
        out += id;
    }
    return out + "}";
}

} // namespace

ValidationReport validate(const StratifiedConfig& c) {
    ValidationReport report;
    if (c.n <= 0) report.findings.push_back({"bad-dimension", "dimension must be positive"});
    if (c.m <= 0) report.findings.push_back({"bad-scaling", "scaling integer m must be positive"});

    std::set<std::string> ids;
    for (const auto& comp : c.components) {
        if (!ids.insert(comp.id).second)
            report.findings.push_back({"duplicate-id", "duplicate component id '" + comp.id + "'"});
        if (comp.alpha.has_value() == comp.resolution.has_value()) {
            report.findings.push_back(
                {"bad-multiplicity",
                 "component '" + comp.id + "' must carry exactly one of alpha / (nu, N)"});
            continue;
        }
        if (c.m > 0) {
            if (comp.alpha && !scaled_integer(*comp.alpha, c.m))
                report.findings.push_back(
                    {"scaling-mismatch",
                     "alpha denominator of '" + comp.id + "' does not divide m"});
            if (comp.resolution) {
                if (!scaled_integer(comp.resolution->first, c.m) ||
                    !scaled_integer(comp.resolution->second, c.m))
                    report.findings.push_back(
                        {"scaling-mismatch",
                         "nu or N denominator of '" + comp.id + "' does not divide m"});
                if (comp.resolution->first < 1)
                    report.findings.push_back(
                        {"non-canonical",
                         "nu < 1 on '" + comp.id + "' (ambient variety must be canonical)"});
            }
        }
    }

    for (const auto& [subset, cls] : c.open_strata) {
        std::string where = "stratum " + subset_label(subset);
        if (static_cast<int>(subset.size()) > c.n)
            report.findings.push_back(
                {"stratum-dimension-negative", where + ": |I| exceeds the ambient dimension"});
        for (const auto& id : subset)
            if (!ids.count(id))
                report.findings.push_back({"unknown-component", where + ": unknown component id"});
        if (c.m > 0) check_class(where, cls, c.m, report);
    }
    return report;
}

MotClass total_class(const StratifiedConfig& c) {
    bool want_l = true, want_h = true;
    for (const auto& [k, cls] : c.open_strata) {
        want_l &= cls.lclass.has_value();
        want_h &= cls.hodge.has_value();
    }
    MotClass acc;
    if (want_l) acc.lclass = LaurentPoly();
    if (want_h) acc.hodge = LaurentPoly();
    for (const auto& [k, cls] : c.open_strata) acc = acc + cls;
    return acc;
}

ValidationReport validate_closed(const ClosedStrataInput& cs) {
    ValidationReport report;
    std::set<std::string> ids(cs.component_ids.begin(), cs.component_ids.end());
    if (ids.size() != cs.component_ids.size())
        report.findings.push_back({"duplicate-id", "duplicate component id"});

    auto empty_key = cs.closed.find(Subset{});
    if (empty_key == cs.closed.end())
        report.findings.push_back({"missing-ambient", "closed stratum for the empty set is required"});
    else if (empty_key->second.dim != cs.n)
        report.findings.push_back({"bad-dimension", "dim of the empty-set stratum must equal n"});

    for (const auto& [subset, stratum] : cs.closed) {
        std::string where = "closed stratum " + subset_label(subset);
        if (static_cast<int>(subset.size()) > cs.n)
            report.findings.push_back(
                {"stratum-dimension-negative", where + ": |I| exceeds the ambient dimension"});
        for (const auto& id : subset)
            if (!ids.count(id))
                report.findings.push_back({"unknown-component", where + ": unknown component id"});
        // Zero closed classes are legitimate (monotone support may require them).
        check_class(where, stratum.cls, cs.m, report, /*allow_zero=*/true);
        // Dimension monotone along inclusions.
        for (const auto& [other, other_stratum] : cs.closed) {
            if (&other == &subset) continue;
            if (is_subset_of(subset, other) && stratum.dim < other_stratum.dim)
                report.findings.push_back(
                    {"dimension-not-monotone",
                     where + ": dim smaller than a superset's dimension"});
        }
        // Monotone support: a nonzero E_J needs every E_I, I ⊆ J, present.
        if (!stratum.cls.is_zero() && subset.size() >= 1) {
            for (std::size_t i = 0; i < subset.size(); ++i) {
                Subset sub = subset;
                sub.erase(sub.begin() + i);
                if (!cs.closed.count(sub))
                    report.findings.push_back(
                        {"support-not-monotone", where + ": missing closed stratum " +
                                                     subset_label(sub)});
            }
        }
    }
    return report;
}

std::map<Subset, MotClass> open_from_closed(const ClosedStrataInput& cs) {
    std::map<Subset, MotClass> open;
    for (const auto& [base, stratum] : cs.closed) {
        MotClass acc = stratum.cls;
        for (const auto& [other, other_stratum] : cs.closed) {
            if (other.size() <= base.size() || !is_subset_of(base, other)) continue;
            std::size_t extra = other.size() - base.size();
            if (extra % 2 == 1)
                acc = acc - other_stratum.cls;
            else
                acc = acc + other_stratum.cls;
        }
        if (!acc.is_zero()) open.emplace(base, std::move(acc));
    }
    return open;
}

namespace {

void all_subsets(const Subset& s, std::set<Subset>& out) {
    std::size_t k = s.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        Subset sub;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint64_t(1) << i)) sub.push_back(s[i]);
        out.insert(std::move(sub));
    }
}

} // namespace

std::map<Subset, MotClass> closed_from_open(const StratifiedConfig& c) {
    std::set<Subset> keys;
    for (const auto& [subset, cls] : c.open_strata) all_subsets(subset, keys);
    std::map<Subset, MotClass> closed;
    for (const auto& key : keys) {
        MotClass acc;
        bool any = false;
        for (const auto& [subset, cls] : c.open_strata) {
            if (!is_subset_of(key, subset)) continue;
            acc = any ? acc + cls : cls;
            any = true;
        }
        // Zero sums stay: Möbius inversion needs every key in the support
        // closure, and closed strata may legitimately carry class zero.
        if (any) closed.emplace(key, std::move(acc));
    }
    return closed;
}

StratifiedConfig restrict_to(const StratifiedConfig& c, const std::map<Subset, MotClass>& w) {
    StratifiedConfig out = c;
    out.open_strata.clear();
    for (const auto& [subset, cls] : w) {
        if (!c.open_strata.count(subset) && !cls.is_zero())
            throw UnknownStratum("relative class supplied for unknown stratum " +
                                 subset_label(subset));
        if (!cls.is_zero()) out.open_strata.emplace(subset, cls);
    }
    return out;
}

} // namespace mpv
