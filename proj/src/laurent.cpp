#include "mpv/laurent.hpp"

#include "mpv/errors.hpp"

#include <algorithm>

namespace mpv {

const char* var_name(Var v) {
    switch (v) {
        case Var::t: return "t";
        case Var::tau: return "tau";
        case Var::U: return "U";
        case Var::V: return "V";
    }
    return "?";
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r;
    for (int i = 0; i < kVarCount; ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r;
    for (int i = 0; i < kVarCount; ++i) r[i] = a[i] - b[i];
    return r;
}

ExpVec exp_neg(const ExpVec& a) {
    ExpVec r;
    for (int i = 0; i < kVarCount; ++i) r[i] = -a[i];
    return r;
}

ExpVec exp_scale(const ExpVec& a, std::int64_t k) {
    ExpVec r;
    for (int i = 0; i < kVarCount; ++i) r[i] = a[i] * k;
    return r;
}

bool exp_is_zero(const ExpVec& a) {
    return a == kZeroExp;
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly p;
    p.add_term(kZeroExp, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, const ExpVec& e) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(Var v, std::int64_t exponent) {
    ExpVec e = kZeroExp;
    at(e, v) = exponent;
    return monomial(Rational(1), e);
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_is_zero(terms_.begin()->first));
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

bool LaurentPoly::uses(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const auto& term) { return at(term.first, v) != 0; });
}

ExpVec LaurentPoly::min_exponents() const {
    ExpVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < kVarCount; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

const std::pair<const ExpVec, Rational>& LaurentPoly::leading() const {
    return *terms_.rbegin();
}

LaurentPoly LaurentPoly::shifted(const ExpVec& delta) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(exp_add(e, delta), c);
    return r;
}

LaurentPoly LaurentPoly::substituted(Var v, const ExpVec& target) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        std::int64_t k = at(e, v);
        ExpVec image = e;
        at(image, v) = 0;
        image = exp_add(image, exp_scale(target, k));
        r.add_term(image, c);
    }
    return r;
}

LaurentPoly LaurentPoly::inverted_variables() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(exp_neg(e), c);
    return r;
}

Rational LaurentPoly::evaluate(const EvalPoint& point) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            const auto& value = point[i];
            if (!value)
                throw Error(std::string("variable ") + var_name(static_cast<Var>(i)) +
                            " occurs but is not assigned");
            if (*value == 0 && e[i] < 0)
                throw PoleAtPoint(std::string("pole: ") + var_name(static_cast<Var>(i)) +
                                  " = 0 raised to a negative power");
            term *= rational_pow(*value, e[i]);
        }
        sum += term;
    }
    return sum;
}

} // namespace mpv
