#include "mpv/config_io.hpp"

#include "mpv/errors.hpp"
#include "mpv/expr_parser.hpp"
#include "mpv/ring_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace mpv {

using nlohmann::json;

LaurentPoly ring_elem_to_laurent(const RingElem& x) {
    if (x.is_zero()) return LaurentPoly();
    if (!x.den().is_monomial())
        throw SchemaError("class expression is not a Laurent polynomial");
    const auto& [den_exp, den_coef] = x.den().leading();
    LaurentPoly out = x.num().shifted(exp_neg(den_exp));
    if (den_coef != 1) out = out * rational_inverse(den_coef);
    return out;
}

namespace {

LaurentPoly parse_class_field(const std::string& text, std::int64_t m, bool hodge,
                              const std::string& where) {
    LaurentPoly p = ring_elem_to_laurent(parse_expression(text, m));
    for (const auto& [e, c] : p.terms()) {
        if (at(e, Var::tau) != 0)
            throw SchemaError(where + ": class expression must not use T");
        if (hodge && at(e, Var::t) != 0)
            throw SchemaError(where + ": hodge class must be an expression in u, v");
        if (!hodge && (at(e, Var::U) != 0 || at(e, Var::V) != 0))
            throw SchemaError(where + ": L-class must be an expression in L");
    }
    return p;
}

MotClass parse_class(const json& node, std::int64_t m, const std::string& where) {
    if (!node.is_object()) throw SchemaError(where + ": class must be an object");
    MotClass cls;
    if (node.contains("L"))
        cls.lclass = parse_class_field(node.at("L").get<std::string>(), m, false, where);
    if (node.contains("hodge"))
        cls.hodge = parse_class_field(node.at("hodge").get<std::string>(), m, true, where);
    if (!cls.lclass && !cls.hodge)
        throw SchemaError(where + ": class needs an \"L\" or a \"hodge\" expression");
    return cls;
}

Subset parse_subset(const json& node, const std::string& where) {
    if (!node.is_array()) throw SchemaError(where + ": subset must be an array of ids");
    std::vector<std::string> ids;
    for (const auto& id : node) ids.push_back(id.get<std::string>());
    return make_subset(std::move(ids));
}

} // namespace

ParsedDocument parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what());
    }

    try {
        ParsedDocument out;
        SurfaceConfig& c = out.config;
        c.n = doc.at("dimension").get<int>();
        c.m = doc.at("denominator").get<std::int64_t>();
        if (c.m <= 0) throw SchemaError("denominator must be a positive integer");

        for (const auto& node : doc.at("components")) {
            std::string id = node.at("id").get<std::string>();
            bool has_alpha = node.contains("alpha");
            bool has_res = node.contains("nu") || node.contains("N");
            if (has_alpha == has_res)
                throw SchemaError("component '" + id +
                                  "' must carry exactly one of alpha / (nu and N)");
            if (has_alpha) {
                c.components.push_back(ComponentData::with_alpha(
                    id, parse_rational(node.at("alpha").get<std::string>())));
            } else {
                if (!node.contains("nu") || !node.contains("N"))
                    throw SchemaError("component '" + id + "' needs both nu and N");
                c.components.push_back(ComponentData::with_resolution(
                    id, parse_rational(node.at("nu").get<std::string>()),
                    parse_rational(node.at("N").get<std::string>())));
            }
            auto sa = scaled_integer(c.components.back().effective_alpha(), c.m);
            if (!sa)
                throw ScalingError("multiplicity denominator of '" + id +
                                   "' does not divide the document denominator");
        }

        for (const auto& node : doc.at("strata")) {
            Subset subset = parse_subset(node.at("subset"), "stratum");
            std::string where = "stratum of size " + std::to_string(subset.size());
            for (const auto& id : subset)
                if (!c.find_component(id))
                    throw SchemaError(where + ": unknown component '" + id + "'");
            MotClass cls = parse_class(node.at("class"), c.m, where);
            if (cls.is_zero()) continue; // zero strata are omitted
            if (!c.open_strata.emplace(std::move(subset), std::move(cls)).second)
                throw SchemaError("duplicate stratum subset");
        }

        if (doc.contains("points")) {
            for (const auto& node : doc.at("points")) {
                NamedPoint p;
                p.id = node.at("id").get<std::string>();
                for (const auto& id : node.at("curves")) p.curves.push_back(id.get<std::string>());
                c.named_points.push_back(std::move(p));
            }
        }

        if (doc.contains("closed_strata")) {
            ClosedStrataInput cs;
            cs.n = c.n;
            cs.m = c.m;
            for (const auto& comp : c.components) cs.component_ids.push_back(comp.id);
            for (const auto& node : doc.at("closed_strata")) {
                Subset subset = parse_subset(node.at("subset"), "closed stratum");
                ClosedStratum stratum;
                stratum.cls = parse_class(node.at("class"), c.m, "closed stratum");
                stratum.dim = node.at("dim").get<int>();
                cs.closed.emplace(std::move(subset), std::move(stratum));
            }
            out.closed = std::move(cs);
        }
        return out;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed configuration document: ") + e.what());
    }
}

ParsedDocument parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open configuration file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

json config_to_json(const SurfaceConfig& c) {
    json doc;
    doc["dimension"] = c.n;
    doc["denominator"] = c.m;
    json components = json::array();
    for (const auto& comp : c.components) {
        json node;
        node["id"] = comp.id;
        if (comp.has_alpha()) {
            node["alpha"] = rational_string(*comp.alpha);
        } else {
            node["nu"] = rational_string(comp.resolution->first);
            node["N"] = rational_string(comp.resolution->second);
        }
        components.push_back(std::move(node));
    }
    doc["components"] = std::move(components);

    json strata = json::array();
    for (const auto& [subset, cls] : c.open_strata) {
        json node;
        node["subset"] = subset;
        json class_node;
        if (cls.lclass) class_node["L"] = render_poly(*cls.lclass, c.m);
        if (cls.hodge) class_node["hodge"] = render_poly(*cls.hodge, c.m);
        node["class"] = std::move(class_node);
        strata.push_back(std::move(node));
    }
    doc["strata"] = std::move(strata);

    if (!c.named_points.empty()) {
        json points = json::array();
        for (const auto& p : c.named_points)
            points.push_back({{"id", p.id}, {"curves", p.curves}});
        doc["points"] = std::move(points);
    }
    return doc;
}

std::string config_to_text(const SurfaceConfig& c) {
    return config_to_json(c).dump(2) + "\n";
}

} // namespace mpv
