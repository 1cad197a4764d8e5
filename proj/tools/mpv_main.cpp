// mpv — exact motivic principal value calculator.
//
// Commands: pv, zeta, hodge-pv, blowup, check, scenario, specialize.
// Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 identity check failed, 2 parse/schema/scaling error, 3 logarithmic pole,
// 4 precondition violation, 5 internal assertion.

#include "mpv/config_io.hpp"
#include "mpv/errors.hpp"
#include "mpv/expr_parser.hpp"
#include "mpv/ring_io.hpp"
#include "mpv/scenarios.hpp"
#include "mpv/surface.hpp"
#include "mpv/zetapv.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace mpv;

RenderStyle style_of(const std::string& format) {
    if (format == "pretty") return RenderStyle::pretty;
    if (format == "json") return RenderStyle::machine;
    throw SchemaError("unknown format '" + format + "' (expected pretty|json)");
}

Realization realization_of(const std::string& name) {
    if (name == "motivic") return Realization::motivic;
    if (name == "hodge") return Realization::hodge;
    throw SchemaError("unknown realization '" + name + "' (expected motivic|hodge)");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
}

void emit_result(const RingElem& x, std::int64_t m, const std::string& format) {
    std::cout << render(x, m, style_of(format)) << "\n";
}

std::vector<Rational> parse_alpha_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        if (piece.empty()) throw SyntaxError("empty entry in alpha list");
        out.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void require_valid(const SurfaceConfig& c) {
    ValidationReport report = c.n == 2 ? validate_surface(c) : validate(c);
    if (report.ok()) return;
    std::string msg = "configuration is invalid:";
    for (const auto& f : report.findings) msg += "\n  [" + f.code + "] " + f.message;
    throw SchemaError(msg);
}

// ---------------------------------------------------------------- commands

int cmd_pv(const std::string& path, const std::string& realization, bool unnormalized,
           const std::string& format) {
    ParsedDocument doc = parse_config_file(path);
    require_valid(doc.config);
    PvValue value = pv(doc.config, realization_of(realization), !unnormalized);
    emit_result(value.expr, value.m, format);
    return 0;
}

int cmd_zeta(const std::string& path, const std::string& realization, const std::string& format) {
    ParsedDocument doc = parse_config_file(path);
    require_valid(doc.config);
    ZetaFunction z = zeta(doc.config, realization_of(realization));
    emit_result(z.expr, z.m, format);
    return 0;
}

int cmd_hodge_pv(const std::string& path, const std::optional<std::string>& shift,
                 std::optional<std::int64_t> s, bool unnormalized, const std::string& format) {
    ParsedDocument doc = parse_config_file(path);
    require_valid(doc.config);
    const StratifiedConfig& c = doc.config;
    if (shift && s) throw SchemaError("--a and --s are mutually exclusive");
    if (s) {
        emit_result(converging_integral(c, *s), c.m, format);
        return 0;
    }
    if (shift) {
        PvValue value = alt_zeta_pv(c, parse_rational(*shift), !unnormalized);
        emit_result(value.expr, value.m, format);
        return 0;
    }
    PvValue value = pv(c, Realization::hodge, !unnormalized);
    PvValue via_def1 = hodge_def1(c, !unnormalized);
    if (!value.expr.equals(via_def1.expr))
        throw InternalCheckFailure("hodge definitions 1 and 2 disagree");
    emit_result(value.expr, value.m, format);
    return 0;
}

int cmd_blowup(const std::string& path, const std::string& center_spec, std::string new_id,
               const std::optional<std::string>& out_path) {
    ParsedDocument doc = parse_config_file(path);
    if (doc.config.n != 2) throw SchemaError("blowup needs a surface configuration (n = 2)");
    require_valid(doc.config);
    BlowupCenter center = BlowupCenter::parse(center_spec);
    if (new_id.empty()) {
        int k = 1;
        while (doc.config.find_component("E" + std::to_string(k))) ++k;
        new_id = "E" + std::to_string(k);
    }
    SurfaceConfig result = blowup(doc.config, center, new_id);
    std::string text = config_to_text(result);
    if (out_path)
        write_text(*out_path, text);
    else
        std::cout << text;
    std::cerr << "blowup " << center.str() << " -> new component " << new_id << " (alpha = "
              << rational_string(result.find_component(new_id)->effective_alpha()) << ")\n";
    return 0;
}

int cmd_specialize(const std::string& path, const std::optional<std::string>& l_value,
                   const std::optional<std::string>& uv_value, bool unnormalized) {
    ParsedDocument doc = parse_config_file(path);
    require_valid(doc.config);
    const StratifiedConfig& c = doc.config;
    if (!l_value == !uv_value)
        throw SchemaError("specialize needs exactly one of --L or --uv");

    RingElem expr;
    Rational base;
    if (l_value) {
        expr = pv(c, Realization::motivic, !unnormalized).expr;
        base = parse_rational(*l_value);
    } else {
        expr = specialize_uv_to_l(pv(c, Realization::hodge, !unnormalized).expr);
        base = parse_rational(*uv_value);
    }

    auto root = rational_nth_root(base, static_cast<unsigned>(c.m));
    if (root) {
        EvalPoint point{};
        point[static_cast<int>(Var::t)] = *root;
        std::cout << rational_string(expr.evaluate(point)) << "\n";
        return 0;
    }
    // No exact m-th root: evaluate in floating point.
    std::array<std::optional<double>, kVarCount> point{};
    point[static_cast<int>(Var::t)] =
        std::pow(base.convert_to<double>(), 1.0 / static_cast<double>(c.m));
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", expr.evaluate_double(point));
    std::cout << buffer << "\n";
    return 0;
}

// ------------------------------------------------------------------ check

struct CheckTally {
    int failed = 0;
    bool poles = false;
    void line(const std::string& name, const std::string& status) {
        std::cout << "check " << name << ": " << status << "\n";
    }
    void ok(const std::string& name) { line(name, "ok"); }
    void fail(const std::string& name, const std::string& why) {
        line(name, "FAIL (" + why + ")");
        ++failed;
    }
    void skip(const std::string& name, const std::string& why) {
        line(name, "skipped (" + why + ")");
    }
};

int cmd_check(const std::string& path) {
    ParsedDocument doc = parse_config_file(path);
    const SurfaceConfig& c = doc.config;
    CheckTally tally;

    ValidationReport report = c.n == 2 ? validate_surface(c) : validate(c);
    if (report.ok()) {
        tally.ok("validate");
    } else {
        std::string why;
        for (const auto& f : report.findings) why += (why.empty() ? "" : "; ") + f.message;
        tally.fail("validate", why);
    }

    auto poles = log_poles(c);
    if (!poles.empty()) {
        tally.poles = true;
        std::string list;
        for (const auto& id : poles) list += (list.empty() ? "" : ", ") + id;
        std::cerr << "pv not defined: logarithmic poles on " << list << "\n";
    }

    bool has_l = c.has_realization(Realization::motivic);
    bool has_h = c.has_realization(Realization::hodge);

    // Resolution consistency: zeta evaluated at s = 1 vs the direct pv.
    bool all_resolution = !c.components.empty();
    for (const auto& comp : c.components) all_resolution &= comp.has_resolution();
    if (!all_resolution) {
        tally.skip("resolution-consistency", "needs (nu, N) data on every component");
    } else if (tally.poles) {
        tally.skip("resolution-consistency", "pv undefined");
    } else {
        bool good = true;
        if (has_l) {
            ExpVec t_inv = kZeroExp;
            at(t_inv, Var::t) = -1;
            good &= zeta(c, Realization::motivic)
                        .expr.substituted(Var::tau, t_inv)
                        .equals(pv_from_resolution(c, Realization::motivic).expr);
        }
        if (has_h) {
            ExpVec uv_inv = kZeroExp;
            at(uv_inv, Var::U) = -1;
            at(uv_inv, Var::V) = -1;
            good &= zeta(c, Realization::hodge)
                        .expr.substituted(Var::tau, uv_inv)
                        .equals(pv_from_resolution(c, Realization::hodge).expr);
        }
        good ? tally.ok("resolution-consistency")
             : tally.fail("resolution-consistency", "zeta at s=1 differs from pv");
    }

    // Hodge definition 1 = definition 2, plus shift independence.
    if (!has_h) {
        tally.skip("hodge-def1-def2", "no hodge realization");
        tally.skip("alt-zeta-shifts", "no hodge realization");
    } else if (tally.poles) {
        tally.skip("hodge-def1-def2", "pv undefined");
        tally.skip("alt-zeta-shifts", "pv undefined");
    } else {
        PvValue reference = pv(c, Realization::hodge);
        hodge_def1(c).expr.equals(reference.expr)
            ? tally.ok("hodge-def1-def2")
            : tally.fail("hodge-def1-def2", "definitions disagree");

        Rational base = 1;
        for (const auto& comp : c.components) {
            Rational bound = 1 - comp.effective_alpha();
            if (bound > base) base = bound;
        }
        bool good = true;
        for (int j = 1; j <= 3; ++j)
            good &= alt_zeta_pv(c, base + Rational(j, c.m)).expr.equals(reference.expr);
        good ? tally.ok("alt-zeta-shifts")
             : tally.fail("alt-zeta-shifts", "shifted zeta changed the value");
    }

    // Deletion of unit components.
    auto units = unit_components(c);
    if (units.empty()) {
        tally.skip("unit-deletion", "no alpha = 1 components");
    } else if (tally.poles) {
        tally.skip("unit-deletion", "pv undefined");
    } else {
        StratifiedConfig reduced = delete_unit_components(c, units);
        bool good = true;
        if (has_l)
            good &= pv(reduced, Realization::motivic).expr.equals(pv(c, Realization::motivic).expr);
        if (has_h)
            good &= pv(reduced, Realization::hodge).expr.equals(pv(c, Realization::hodge).expr);
        good ? tally.ok("unit-deletion") : tally.fail("unit-deletion", "pv changed");
    }

    // Duality functional equation, when closed strata are supplied.
    if (!doc.closed) {
        tally.skip("duality", "no closed_strata in the document");
    } else if (tally.poles) {
        tally.skip("duality", "pv undefined");
    } else {
        ValidationReport closed_report = validate_closed(*doc.closed);
        if (!closed_report.ok()) {
            tally.fail("duality", "closed strata invalid");
        } else {
            std::vector<Rational> alphas;
            for (const auto& id : doc.closed->component_ids)
                alphas.push_back(c.find_component(id)->effective_alpha());
            auto fe = functional_equation_check(*doc.closed, alphas);
            fe.holds ? tally.ok("duality") : tally.fail("duality", fe.note);
        }
    }

    // One blow-up of each feasible kind on surfaces.
    if (c.n == 2 && !tally.poles) {
        std::vector<BlowupCenter> centers{BlowupCenter::free_point()};
        if (!c.components.empty()) centers.push_back(BlowupCenter::on_curve(c.components[0].id));
        for (const auto& [subset, cls] : c.open_strata)
            if (subset.size() == 2) {
                centers.push_back(BlowupCenter::at_double_point(subset[0], subset[1]));
                break;
            }
        bool good = true;
        std::string why;
        for (const auto& center : centers) {
            SurfaceConfig after = blowup(c, center, "__blowup_check");
            if (!(total_class(after) == total_class(c) + MotClass::lefschetz_power(1, c.m))) {
                good = false;
                why = "total class did not gain L under " + center.str();
                break;
            }
            auto inv = invariance_report(c, after);
            if (inv.before_defined && inv.after_defined && !inv.equal.value_or(false)) {
                good = false;
                why = "pv changed under " + center.str();
                break;
            }
        }
        good ? tally.ok("blowup-invariance") : tally.fail("blowup-invariance", why);
    } else if (c.n == 2) {
        tally.skip("blowup-invariance", "pv undefined");
    }

    if (tally.failed > 0) return 1;
    if (tally.poles) return 3;
    return 0;
}

// --------------------------------------------------------------- scenario

struct ScenarioFlags {
    std::string name;
    std::string alphas;
    std::string base;
    std::string with_class;
    int with_dim = 1;
    std::string family = "p1";
    std::uint64_t seed = 0;
    int dmax = 2;
    int kmax = 5;
    std::optional<std::string> out;
    std::string format = "pretty";
};

SurfaceConfig scenario_config(const std::string& name, const ScenarioFlags& flags);

StratifiedConfig scenario_stratified(const std::string& name, const ScenarioFlags& flags) {
    using namespace scenarios;
    if (name == "p1points") {
        if (flags.alphas.empty()) throw SchemaError("p1points needs --alphas");
        return p1_points(parse_alpha_list(flags.alphas));
    }
    if (name == "random")
        return random_canonical(flags.seed,
                                flags.family == "p2lines" ? Family::p2lines : Family::p1,
                                flags.dmax, flags.kmax);
    if (name == "product") {
        if (flags.base.empty() || flags.with_class.empty())
            throw SchemaError("product needs --base and --with-class");
        ScenarioFlags inner = flags;
        inner.name = flags.base;
        inner.base.clear();
        StratifiedConfig base_config = scenario_stratified(flags.base, inner);
        RingElem cls = parse_expression(flags.with_class, base_config.m);
        LaurentPoly l = ring_elem_to_laurent(cls);
        // Mirror in uv when the class is in L.
        LaurentPoly h;
        for (const auto& [e, coef] : l.terms()) {
            ExpVec eh = kZeroExp;
            at(eh, Var::U) = at(e, Var::t);
            at(eh, Var::V) = at(e, Var::t);
            h.add_term(eh, coef);
        }
        return product_with(base_config, MotClass::from_both(l, h), flags.with_dim);
    }
    return scenario_config(name, flags);
}

SurfaceConfig scenario_config(const std::string& name, const ScenarioFlags& flags) {
    using namespace scenarios;
    if (name == "example34a") return example34a();
    if (name == "example34b") return example34b();
    if (name == "p2lines") {
        if (flags.alphas.empty()) throw SchemaError("p2lines needs --alphas");
        return p2_lines(parse_alpha_list(flags.alphas));
    }
    throw SchemaError("unknown scenario '" + name +
                      "' (expected example34a|example34b|figure2chain|figure1mult|"
                      "p1points|p2lines|product|random)");
}

int cmd_scenario(const ScenarioFlags& flags) {
    using namespace scenarios;
    const std::string& name = flags.name;

    if (name == "figure1mult") {
        auto fig = figure1_multiplicity();
        nlohmann::json j{{"codim", fig.codim},
                         {"alpha", rational_string(fig.alpha)},
                         {"coefficient", rational_string(fig.coefficient)}};
        nlohmann::json branches = nlohmann::json::array();
        for (const auto& [a, mult] : fig.branches)
            branches.push_back({{"alpha", rational_string(a)}, {"mult", mult}});
        j["branches"] = std::move(branches);
        if (flags.out) {
            write_text(*flags.out, j.dump(2) + "\n");
        } else if (flags.format == "json") {
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "exceptional alpha = " << rational_string(fig.alpha)
                      << " (coefficient " << rational_string(fig.coefficient)
                      << " in div omega^{1/d})\n";
        }
        return 0;
    }

    if (name == "figure2chain") {
        auto chain = figure2_chain();
        if (flags.out) {
            nlohmann::json stages = nlohmann::json::array();
            for (const auto& stage : chain) {
                nlohmann::json node{{"label", stage.label},
                                    {"config", config_to_json(stage.config)}};
                if (stage.center) node["center"] = stage.center->str();
                if (stage.new_component) node["new_component"] = *stage.new_component;
                stages.push_back(std::move(node));
            }
            write_text(*flags.out, nlohmann::json{{"chain", stages}}.dump(2) + "\n");
            return 0;
        }
        for (const auto& stage : chain) {
            std::cout << "stage " << stage.label;
            if (stage.center)
                std::cout << ": blowup " << stage.center->str() << " -> " << *stage.new_component
                          << " (alpha = "
                          << rational_string(
                                 stage.config.find_component(*stage.new_component)->effective_alpha())
                          << ")";
            auto poles = log_poles(stage.config);
            if (poles.empty()) {
                std::cout << "; pv = "
                          << render(pv(stage.config, Realization::motivic).expr, stage.config.m,
                                    style_of(flags.format));
            } else {
                std::string list;
                for (const auto& id : poles) list += (list.empty() ? "" : ", ") + id;
                std::cout << "; pv not defined (log poles: " << list << ")";
            }
            std::cout << "\n";
        }
        return 0;
    }

    StratifiedConfig c = scenario_stratified(name, flags);
    if (flags.out) {
        SurfaceConfig as_doc;
        static_cast<StratifiedConfig&>(as_doc) = c;
        write_text(*flags.out, config_to_text(as_doc));
        return 0;
    }
    PvValue value = pv(c, c.has_realization(Realization::motivic) ? Realization::motivic
                                                                  : Realization::hodge);
    emit_result(value.expr, value.m, flags.format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mpv — exact motivic principal value calculator"};
    app.require_subcommand(1);

    std::string config_path, realization = "motivic", format = "pretty";
    bool unnormalized = false;

    auto add_common = [&](CLI::App* cmd, bool with_realization = true) {
        cmd->add_option("config", config_path, "configuration document (JSON)")->required();
        cmd->add_option("--format", format, "output format: pretty|json");
        if (with_realization)
            cmd->add_option("--realization", realization, "realization: motivic|hodge");
    };

    auto* pv_cmd = app.add_subcommand("pv", "principal value integral of a configuration");
    add_common(pv_cmd);
    pv_cmd->add_flag("--unnormalized", unnormalized, "omit the L^{-n} prefactor");

    auto* zeta_cmd = app.add_subcommand("zeta", "zeta function of a configuration");
    add_common(zeta_cmd);

    std::optional<std::string> shift;
    std::optional<std::int64_t> s_value;
    auto* hodge_cmd =
        app.add_subcommand("hodge-pv", "hodge-level principal value (definitions cross-checked)");
    add_common(hodge_cmd, false);
    hodge_cmd->add_option("--a", shift, "use the twisted zeta with shift a (rational)");
    hodge_cmd->add_option("--s", s_value, "converging integral at integer s instead of pv");
    hodge_cmd->add_flag("--unnormalized", unnormalized, "omit the (uv)^{-n} prefactor");

    std::string center_spec, new_id;
    std::optional<std::string> out_path;
    auto* blowup_cmd = app.add_subcommand("blowup", "blow up a surface configuration at a point");
    blowup_cmd->add_option("config", config_path, "configuration document (JSON)")->required();
    blowup_cmd->add_option("--center", center_spec, "free | curve:<id> | point:<id>,<id>")
        ->required();
    blowup_cmd->add_option("--new-id", new_id, "id of the exceptional component");
    blowup_cmd->add_option("--out", out_path, "write the resulting document here");

    auto* check_cmd = app.add_subcommand("check", "run the identity checks relevant to the input");
    check_cmd->add_option("config", config_path, "configuration document (JSON)")->required();

    ScenarioFlags scenario;
    auto* scenario_cmd = app.add_subcommand("scenario", "materialize a named scenario");
    scenario_cmd->add_option("name", scenario.name, "scenario name")->required();
    scenario_cmd->add_option("--alphas", scenario.alphas, "comma-separated alpha list");
    scenario_cmd->add_option("--base", scenario.base, "base scenario for product");
    scenario_cmd->add_option("--with-class", scenario.with_class, "factor class for product");
    scenario_cmd->add_option("--with-dim", scenario.with_dim, "factor dimension for product");
    scenario_cmd->add_option("--family", scenario.family, "random family: p1|p2lines");
    scenario_cmd->add_option("--seed", scenario.seed, "random seed");
    scenario_cmd->add_option("--dmax", scenario.dmax, "max denominator for random alphas");
    scenario_cmd->add_option("--kmax", scenario.kmax, "max component count for random configs");
    scenario_cmd->add_option("--out", scenario.out, "write the configuration document here");
    scenario_cmd->add_option("--format", scenario.format, "output format: pretty|json");

    std::optional<std::string> l_value, uv_value;
    auto* spec_cmd = app.add_subcommand("specialize", "evaluate the pv at a numeric point");
    spec_cmd->add_option("config", config_path, "configuration document (JSON)")->required();
    spec_cmd->add_option("--L", l_value, "value of L (rational)");
    spec_cmd->add_option("--uv", uv_value, "value of uv (rational)");
    spec_cmd->add_flag("--unnormalized", unnormalized, "omit the prefactor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (pv_cmd->parsed()) return cmd_pv(config_path, realization, unnormalized, format);
        if (zeta_cmd->parsed()) return cmd_zeta(config_path, realization, format);
        if (hodge_cmd->parsed())
            return cmd_hodge_pv(config_path, shift, s_value, unnormalized, format);
        if (blowup_cmd->parsed()) return cmd_blowup(config_path, center_spec, new_id, out_path);
        if (check_cmd->parsed()) return cmd_check(config_path);
        if (scenario_cmd->parsed()) return cmd_scenario(scenario);
        if (spec_cmd->parsed()) return cmd_specialize(config_path, l_value, uv_value, unnormalized);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
