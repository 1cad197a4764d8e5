// Python bindings: the main operations of the engine, with rationals crossing
// the boundary as strings ("p/q") so exactness survives.

#include "mpv/config_io.hpp"
#include "mpv/errors.hpp"
#include "mpv/expr_parser.hpp"
#include "mpv/ring_io.hpp"
#include "mpv/scenarios.hpp"
#include "mpv/surface.hpp"
#include "mpv/zetapv.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mpv;

namespace {

// A RingElem together with the scaling it was built under, so rendering and
// evaluation need no extra arguments.
struct PyExpr {
    RingElem value;
    std::int64_t m = 1;

    std::string pretty() const { return render(value, m, RenderStyle::pretty); }
    std::string machine() const { return render(value, m, RenderStyle::machine); }
    bool is_zero() const { return value.is_zero(); }
    bool equals(const PyExpr& o) const { return value.equals(o.value); }
    std::string evaluate_at_t(const std::string& t) const {
        EvalPoint point{};
        point[static_cast<int>(Var::t)] = parse_rational(t);
        return rational_string(value.evaluate(point));
    }
    PyExpr dual() const { return {value.inverted_variables(), m}; }
};

PyExpr make_expr(const RingElem& x, std::int64_t m) { return PyExpr{x, m}; }

struct PyDocument {
    SurfaceConfig config;
    std::optional<ClosedStrataInput> closed;

    std::vector<std::string> validate_findings() const {
        ValidationReport report =
            config.n == 2 ? validate_surface(config) : mpv::validate(config);
        std::vector<std::string> out;
        for (const auto& f : report.findings) out.push_back("[" + f.code + "] " + f.message);
        if (closed) {
            for (const auto& f : validate_closed(*closed).findings)
                out.push_back("[closed:" + f.code + "] " + f.message);
        }
        return out;
    }
};

Realization realization_of(const std::string& name) {
    if (name == "motivic") return Realization::motivic;
    if (name == "hodge") return Realization::hodge;
    throw SchemaError("unknown realization '" + name + "' (expected motivic|hodge)");
}

PyDocument document_from(const SurfaceConfig& c) { return PyDocument{c, std::nullopt}; }

ClosedStrataInput derive_closed(const StratifiedConfig& c) {
    ClosedStrataInput cs;
    cs.n = c.n;
    cs.m = c.m;
    for (const auto& comp : c.components) cs.component_ids.push_back(comp.id);
    for (const auto& [k, cls] : closed_from_open(c))
        cs.closed.emplace(k, ClosedStratum{cls, c.n - static_cast<int>(k.size())});
    return cs;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact motivic principal value engine";

    py::register_exception<Error>(m, "EngineError");

    py::class_<PyExpr>(m, "Expr")
        .def_property_readonly("m", [](const PyExpr& e) { return e.m; })
        .def("pretty", &PyExpr::pretty)
        .def("machine", &PyExpr::machine)
        .def("is_zero", &PyExpr::is_zero)
        .def("equals", &PyExpr::equals)
        .def("__eq__", &PyExpr::equals)
        .def("evaluate_at_t", &PyExpr::evaluate_at_t, py::arg("t"),
             "exact evaluation at a rational value of t = L^(1/m)")
        .def("dual", &PyExpr::dual, "every variable replaced by its inverse")
        .def("__repr__", [](const PyExpr& e) { return "<Expr " + e.pretty() + ">"; });

    py::class_<PyDocument>(m, "Document")
        .def_property_readonly("dimension", [](const PyDocument& d) { return d.config.n; })
        .def_property_readonly("denominator", [](const PyDocument& d) { return d.config.m; })
        .def_property_readonly("components",
                               [](const PyDocument& d) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& comp : d.config.components)
                                       out.emplace_back(comp.id,
                                                        rational_string(comp.effective_alpha()));
                                   return out;
                               },
                               "list of (id, alpha) pairs")
        .def("validate", &PyDocument::validate_findings, "list of violations; empty when valid")
        .def("to_json", [](const PyDocument& d) { return config_to_text(d.config); })
        .def(
            "pv",
            [](const PyDocument& d, const std::string& realization, bool normalized) {
                return make_expr(pv(d.config, realization_of(realization), normalized).expr,
                                 d.config.m);
            },
            py::arg("realization") = "motivic", py::arg("normalized") = true)
        .def(
            "zeta",
            [](const PyDocument& d, const std::string& realization) {
                return make_expr(zeta(d.config, realization_of(realization)).expr, d.config.m);
            },
            py::arg("realization") = "motivic")
        .def("hodge_def1",
             [](const PyDocument& d) { return make_expr(hodge_def1(d.config).expr, d.config.m); })
        .def(
            "converging_integral",
            [](const PyDocument& d, std::int64_t s) {
                return make_expr(converging_integral(d.config, s), d.config.m);
            },
            py::arg("s"))
        .def(
            "alt_zeta_pv",
            [](const PyDocument& d, const std::string& a) {
                return make_expr(alt_zeta_pv(d.config, parse_rational(a)).expr, d.config.m);
            },
            py::arg("a"))
        .def("log_poles", [](const PyDocument& d) { return log_poles(d.config); })
        .def(
            "delete_unit_components",
            [](const PyDocument& d, std::optional<std::vector<std::string>> ids) {
                SurfaceConfig out = d.config;
                static_cast<StratifiedConfig&>(out) = delete_unit_components(
                    d.config, ids ? *ids : unit_components(d.config));
                return document_from(out);
            },
            py::arg("ids") = py::none())
        .def(
            "blowup",
            [](const PyDocument& d, const std::string& center, const std::string& new_id) {
                return document_from(blowup(d.config, BlowupCenter::parse(center), new_id));
            },
            py::arg("center"), py::arg("new_id"))
        .def("functional_equation",
             [](const PyDocument& d) {
                 std::vector<Rational> alphas;
                 const ClosedStrataInput cs =
                     d.closed ? *d.closed : derive_closed(d.config);
                 for (const auto& id : cs.component_ids)
                     alphas.push_back(d.config.find_component(id)->effective_alpha());
                 auto fe = functional_equation_check(cs, alphas);
                 py::dict out;
                 out["holds"] = fe.holds;
                 out["pv_unnormalized"] = make_expr(fe.pv_unnormalized.expr, d.config.m);
                 out["dual"] = make_expr(fe.dual, d.config.m);
                 out["expected"] = make_expr(fe.expected, d.config.m);
                 out["note"] = fe.note;
                 return out;
             },
             "checks D(PVu) = L^{-n} PVu; closed strata from the document when "
             "present, else derived from the open strata")
        .def("invariance_report", [](const PyDocument& d, const PyDocument& other) {
            auto report = invariance_report(d.config, other.config);
            py::dict out;
            out["before_defined"] = report.before_defined;
            out["after_defined"] = report.after_defined;
            out["before_poles"] = report.before_poles;
            out["after_poles"] = report.after_poles;
            out["equal"] = report.equal ? py::cast(*report.equal) : py::none();
            out["summary"] = report.summary();
            return out;
        });

    m.def("parse_config", [](const std::string& text) {
        ParsedDocument doc = parse_config_text(text);
        return PyDocument{std::move(doc.config), std::move(doc.closed)};
    });
    m.def(
        "parse_expr",
        [](const std::string& text, std::int64_t scaling) {
            return make_expr(parse_expression(text, scaling), scaling);
        },
        py::arg("text"), py::arg("m"));
    m.def(
        "exceptional_alpha",
        [](int codim, const std::vector<std::pair<std::string, std::int64_t>>& branches) {
            std::vector<std::pair<Rational, std::int64_t>> parsed;
            for (const auto& [a, mult] : branches) parsed.emplace_back(parse_rational(a), mult);
            return rational_string(exceptional_alpha(codim, parsed));
        },
        py::arg("codim"), py::arg("branches"),
        "alpha of the exceptional divisor: codim + sum mult*(alpha - 1)");

    auto scen = m.def_submodule("scenarios", "builders for the worked examples");
    scen.def("example34a", [] { return document_from(scenarios::example34a()); });
    scen.def("example34b", [] { return document_from(scenarios::example34b()); });
    scen.def("figure2_chain", [] {
        py::list out;
        for (const auto& stage : scenarios::figure2_chain()) {
            py::dict node;
            node["label"] = stage.label;
            node["center"] = stage.center ? py::cast(stage.center->str()) : py::none();
            node["new_component"] =
                stage.new_component ? py::cast(*stage.new_component) : py::none();
            node["config"] = document_from(stage.config);
            out.append(std::move(node));
        }
        return out;
    });
    scen.def("figure1_multiplicity", [] {
        auto fig = scenarios::figure1_multiplicity();
        py::dict out;
        out["codim"] = fig.codim;
        out["alpha"] = rational_string(fig.alpha);
        out["coefficient"] = rational_string(fig.coefficient);
        return out;
    });
    scen.def("p1_points", [](const std::vector<std::string>& alphas) {
        std::vector<Rational> parsed;
        for (const auto& a : alphas) parsed.push_back(parse_rational(a));
        SurfaceConfig wrap;
        static_cast<StratifiedConfig&>(wrap) = scenarios::p1_points(parsed);
        return document_from(wrap);
    });
    scen.def("p2_lines", [](const std::vector<std::string>& alphas) {
        std::vector<Rational> parsed;
        for (const auto& a : alphas) parsed.push_back(parse_rational(a));
        return document_from(scenarios::p2_lines(parsed));
    });
    scen.def(
        "random_canonical",
        [](std::uint64_t seed, const std::string& family, int d_max, int k_max) {
            SurfaceConfig wrap;
            static_cast<StratifiedConfig&>(wrap) = scenarios::random_canonical(
                seed, family == "p2lines" ? scenarios::Family::p2lines : scenarios::Family::p1,
                d_max, k_max);
            return document_from(wrap);
        },
        py::arg("seed"), py::arg("family") = "p1", py::arg("d_max") = 2, py::arg("k_max") = 5);
}
