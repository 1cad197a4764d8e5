#include "mpv/ring_io.hpp"

#include <nlohmann/json.hpp>

#include <numeric>

namespace mpv {

namespace {

struct ExpFraction {
    std::int64_t p;
    std::int64_t q; // > 0, gcd(|p|, q) = 1
};

ExpFraction reduced(std::int64_t k, std::int64_t m) {
    std::int64_t g = std::gcd(k < 0 ? -k : k, m);
    if (g == 0) return {0, 1};
    return {k / g, m / g};
}

std::string exponent_suffix(const ExpFraction& f) {
    if (f.p == 1 && f.q == 1) return "";
    std::string body = std::to_string(f.p);
    if (f.q != 1) body += "/" + std::to_string(f.q);
    if (f.p >= 0 && f.q == 1) return "^" + body;
    return "^(" + body + ")";
}

// The variable part of one monomial, in L/T/u/v notation; empty for constants.
std::string monomial_string(const ExpVec& e, std::int64_t m) {
    std::vector<std::string> parts;
    auto piece = [&](const char* name, std::int64_t k) {
        if (k == 0) return;
        parts.push_back(name + exponent_suffix(reduced(k, m)));
    };
    piece("L", at(e, Var::t));
    piece("T", at(e, Var::tau));
    std::int64_t eu = at(e, Var::U), ev = at(e, Var::V);
    if (eu != 0 && eu == ev) {
        ExpFraction f = reduced(eu, m);
        if (f.p == 1 && f.q == 1)
            parts.push_back("u*v");
        else
            parts.push_back("(u*v)" + exponent_suffix(f));
    } else {
        piece("u", eu);
        piece("v", ev);
    }
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "*";
        out += p;
    }
    return out;
}

std::string term_magnitude(const Rational& coef, const ExpVec& e, std::int64_t m) {
    Rational mag = coef < 0 ? Rational(-coef) : coef;
    std::string vars = monomial_string(e, m);
    if (vars.empty()) return rational_string(mag);
    if (mag == 1) return vars;
    return rational_string(mag) + "*" + vars;
}

bool all_negative(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c > 0) return false;
    return !p.is_zero();
}

} // namespace

std::string render_poly(const LaurentPoly& p, std::int64_t m) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    // Descending canonical monomial order.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += term_magnitude(c, e, m);
    }
    return out;
}

std::string render(const RingElem& x, std::int64_t m, RenderStyle style) {
    if (style == RenderStyle::machine) return machine_json(x, m).dump();
    if (x.is_zero()) return "0";

    const LaurentPoly& num = x.num();
    const LaurentPoly& den = x.den();
    bool trivial_den = den.is_constant(); // monic, so a constant den is 1

    std::string num_str;
    if (num.term_count() > 1 && all_negative(num))
        num_str = "-(" + render_poly(-num, m) + ")";
    else if (num.term_count() > 1 && !trivial_den)
        num_str = "(" + render_poly(num, m) + ")";
    else
        num_str = render_poly(num, m);

    if (trivial_den) return num_str;

    std::string den_str = render_poly(den, m);
    // A lone factor like "L^(3/2)" binds correctly after '/'; anything with an
    // operator needs parentheses.
    if (den_str.find_first_of("*+- ") != std::string::npos) den_str = "(" + den_str + ")";
    return num_str + "/" + den_str;
}

nlohmann::json machine_json(const RingElem& x, std::int64_t m) {
    auto poly_terms = [](const LaurentPoly& p) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const auto& [e, c] = *it;
            nlohmann::json exp = nlohmann::json::object();
            for (Var v : kAllVars)
                if (at(e, v) != 0) exp[var_name(v)] = at(e, v);
            arr.push_back({{"exp", std::move(exp)}, {"coef", rational_string(c)}});
        }
        return arr;
    };
    return nlohmann::json{
        {"num", poly_terms(x.num())}, {"den", poly_terms(x.den())}, {"m", m}};
}

} // namespace mpv
