#include "mpv/surface.hpp"

#include "mpv/errors.hpp"
#include "mpv/zetapv.hpp"

#include <algorithm>

namespace mpv {

BlowupCenter BlowupCenter::free_point() {
    return BlowupCenter{CenterKind::Free, "", ""};
}

BlowupCenter BlowupCenter::on_curve(std::string id) {
    return BlowupCenter{CenterKind::OnCurve, std::move(id), ""};
}

BlowupCenter BlowupCenter::at_double_point(std::string i, std::string j) {
    return BlowupCenter{CenterKind::AtDoublePoint, std::move(i), std::move(j)};
}

BlowupCenter BlowupCenter::parse(std::string_view text) {
    if (text == "free") return free_point();
    if (text.rfind("curve:", 0) == 0) {
        std::string id(text.substr(6));
        if (id.empty()) throw InvalidCenter("empty curve id in center specification");
        return on_curve(std::move(id));
    }
    if (text.rfind("point:", 0) == 0) {
        std::string rest(text.substr(6));
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw InvalidCenter("double point center needs two ids: point:<id>,<id>");
        std::string i = rest.substr(0, comma), j = rest.substr(comma + 1);
        if (i.empty() || j.empty()) throw InvalidCenter("empty id in center specification");
        return at_double_point(std::move(i), std::move(j));
    }
    throw InvalidCenter("unknown center '" + std::string(text) +
                        "' (expected free | curve:<id> | point:<id>,<id>)");
}

std::string BlowupCenter::str() const {
    switch (kind) {
        case CenterKind::Free: return "free";
        case CenterKind::OnCurve: return "curve:" + a;
        case CenterKind::AtDoublePoint: return "point:" + a + "," + b;
    }
    return "?";
}

namespace {

// The double-point count of a pair stratum; requires a constant class.
std::optional<Rational> pair_count(const MotClass& cls) {
    Rational value;
    bool have = false;
    for (const auto& slot : {cls.lclass, cls.hodge}) {
        if (!slot) continue;
        if (!slot->is_constant()) return std::nullopt;
        Rational v = slot->is_zero() ? Rational(0) : slot->terms().begin()->second;
        if (have && v != value) return std::nullopt;
        value = v;
        have = true;
    }
    if (!have) return std::nullopt;
    return value;
}

// Realizations carried by every stratum of the config.
std::pair<bool, bool> common_realizations(const StratifiedConfig& c) {
    bool l = true, h = true;
    for (const auto& [k, cls] : c.open_strata) {
        l &= cls.lclass.has_value();
        h &= cls.hodge.has_value();
    }
    return {l, h};
}

MotClass project(const MotClass& cls, bool keep_l, bool keep_h) {
    MotClass out;
    if (keep_l) out.lclass = cls.lclass;
    if (keep_h) out.hodge = cls.hodge;
    return out;
}

// cls restricted to the available realizations of c; absent strata are zero.
void add_into(std::map<Subset, MotClass>& strata, const Subset& key, const MotClass& delta) {
    auto it = strata.find(key);
    if (it == strata.end()) {
        if (!delta.is_zero()) strata.emplace(key, delta);
        return;
    }
    it->second = it->second + delta;
    if (it->second.is_zero()) strata.erase(it);
}

} // namespace

ValidationReport validate_surface(const SurfaceConfig& c) {
    ValidationReport report = validate(c);
    if (c.n != 2) report.findings.push_back({"bad-dimension", "surface configuration must have n = 2"});
    for (const auto& [subset, cls] : c.open_strata) {
        if (subset.size() >= 3)
            report.findings.push_back(
                {"not-snc", "stratum of size >= 3 on a surface violates normal crossings"});
        if (subset.size() == 2) {
            auto count = pair_count(cls);
            if (!count || denominator(*count) != 1 || *count < 0)
                report.findings.push_back(
                    {"bad-double-point",
                     "double-point stratum must be a nonnegative integer count"});
        }
    }
    for (const auto& point : c.named_points) {
        if (point.curves.empty() || point.curves.size() > 2)
            report.findings.push_back(
                {"bad-named-point", "named point '" + point.id + "' must lie on one or two curves"});
        for (const auto& id : point.curves)
            if (!c.find_component(id))
                report.findings.push_back(
                    {"unknown-component",
                     "named point '" + point.id + "' references unknown curve '" + id + "'"});
    }
    return report;
}

SurfaceConfig blowup(const SurfaceConfig& c, const BlowupCenter& center,
                     const std::string& new_id) {
    if (new_id.empty()) throw InvalidCenter("new component id must not be empty");
    if (c.find_component(new_id))
        throw InvalidCenter("component id '" + new_id + "' already exists");

    auto [keep_l, keep_h] = common_realizations(c);
    if (!keep_l && !keep_h)
        throw MissingRealization("configuration has no realization common to all strata");

    bool all_resolution = !c.components.empty() &&
                          std::all_of(c.components.begin(), c.components.end(),
                                      [](const ComponentData& comp) { return comp.has_resolution(); });

    SurfaceConfig out = c;
    for (auto& [key, cls] : out.open_strata) cls = project(cls, keep_l, keep_h);

    auto class_of = [&](std::int64_t lefschetz_coef, std::int64_t constant) {
        // lefschetz_coef * L + constant, in the kept realizations
        MotClass value = MotClass::lefschetz_power(1, c.m) * MotClass::constant(lefschetz_coef) +
                         MotClass::constant(constant);
        return project(value, keep_l, keep_h);
    };
    auto constant_of = [&](const Rational& v) {
        return project(MotClass::constant(v), keep_l, keep_h);
    };

    const ComponentData* ca = nullptr;
    const ComponentData* cb = nullptr;
    switch (center.kind) {
        case CenterKind::Free: {
            out.components.push_back(all_resolution
                                         ? ComponentData::with_resolution(new_id, 2, 0)
                                         : ComponentData::with_alpha(new_id, 2));
            add_into(out.open_strata, Subset{}, constant_of(-1));
            add_into(out.open_strata, make_subset({new_id}), class_of(1, 1)); // L + 1
            break;
        }
        case CenterKind::OnCurve: {
            ca = c.find_component(center.a);
            if (!ca) throw InvalidCenter("unknown curve '" + center.a + "'");
            if (all_resolution)
                out.components.push_back(ComponentData::with_resolution(
                    new_id, ca->resolution->first + 1, ca->resolution->second));
            else
                out.components.push_back(
                    ComponentData::with_alpha(new_id, ca->effective_alpha() + 1));
            add_into(out.open_strata, make_subset({center.a}), constant_of(-1));
            add_into(out.open_strata, make_subset({new_id}), class_of(1, 0)); // L
            add_into(out.open_strata, make_subset({center.a, new_id}), constant_of(1));
            break;
        }
        case CenterKind::AtDoublePoint: {
            ca = c.find_component(center.a);
            cb = c.find_component(center.b);
            if (!ca || !cb)
                throw InvalidCenter("unknown curve in double point " + center.str());
            if (center.a == center.b)
                throw InvalidCenter("double point needs two distinct curves");
            Subset pair = make_subset({center.a, center.b});
            auto it = c.open_strata.find(pair);
            if (it == c.open_strata.end())
                throw ExhaustedDoublePoint("curves " + center.a + ", " + center.b +
                                           " have no double point left");
            auto count = pair_count(it->second);
            if (!count || denominator(*count) != 1 || *count < 0)
                throw InvalidCenter("double-point stratum of " + center.a + ", " + center.b +
                                    " is not an integer count");
            if (*count < 1)
                throw ExhaustedDoublePoint("curves " + center.a + ", " + center.b +
                                           " have no double point left");
            if (all_resolution)
                out.components.push_back(ComponentData::with_resolution(
                    new_id, ca->resolution->first + cb->resolution->first,
                    ca->resolution->second + cb->resolution->second));
            else
                out.components.push_back(ComponentData::with_alpha(
                    new_id, ca->effective_alpha() + cb->effective_alpha()));
            add_into(out.open_strata, pair, constant_of(-1));
            add_into(out.open_strata, make_subset({new_id}), class_of(1, -1)); // L - 1
            add_into(out.open_strata, make_subset({center.a, new_id}), constant_of(1));
            add_into(out.open_strata, make_subset({center.b, new_id}), constant_of(1));
            break;
        }
    }
    return out;
}

Rational exceptional_alpha(int codim,
                           const std::vector<std::pair<Rational, std::int64_t>>& branches) {
    Rational alpha = codim;
    for (const auto& [branch_alpha, mult] : branches) alpha += (branch_alpha - 1) * mult;
    return alpha;
}

std::string InvarianceReport::summary() const {
    auto side = [](bool defined, const std::vector<std::string>& poles) {
        if (defined) return std::string("defined");
        std::string out = "not defined (log poles:";
        for (const auto& id : poles) out += " " + id;
        return out + ")";
    };
    std::string out = "before: " + side(before_defined, before_poles) +
                      "; after: " + side(after_defined, after_poles);
    if (equal) out += equal.value() ? "; PV equal" : "; PV DIFFER";
    return out;
}

InvarianceReport invariance_report(const SurfaceConfig& before, const SurfaceConfig& after) {
    InvarianceReport report;
    report.before_poles = log_poles(before);
    report.after_poles = log_poles(after);
    report.before_defined = report.before_poles.empty();
    report.after_defined = report.after_poles.empty();
    if (!report.before_defined || !report.after_defined) return report;

    bool equal = true;
    bool compared = false;
    for (Realization r : {Realization::motivic, Realization::hodge}) {
        if (!before.has_realization(r) || !after.has_realization(r)) continue;
        equal &= pv(before, r).expr.equals(pv(after, r).expr);
        compared = true;
    }
    if (!compared)
        throw MissingRealization("no realization available on both sides of the comparison");
    report.equal = equal;
    return report;
}

} // namespace mpv
