#include "mpv/ring_elem.hpp"

#include "mpv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace mpv {

namespace {

// --- univariate reduction along a shared exponent direction ----------------
//
// After monomial-gcd normalization every exponent vector in num and den is
// componentwise >= 0. When all of them are integer multiples of one primitive
// direction d, num and den are univariate polynomials in y = x^d and can be
// reduced by the univariate gcd. This covers both the single-variable case
// (d = t) and the Hodge diagonal (d = UV).

std::optional<ExpVec> primitive_direction(const LaurentPoly& num, const LaurentPoly& den) {
    const ExpVec* first = nullptr;
    for (const auto* p : {&num, &den}) {
        for (const auto& [e, c] : p->terms()) {
            if (!exp_is_zero(e)) {
                first = &e;
                break;
            }
        }
        if (first) break;
    }
    if (!first) return std::nullopt; // both constant
    std::int64_t g = 0;
    for (auto x : *first) g = std::gcd(g, x < 0 ? -x : x);
    ExpVec dir;
    for (int i = 0; i < kVarCount; ++i) dir[i] = (*first)[i] / g;
    return dir;
}

// Multiple of dir: e == k*dir with k >= 0; returns k or nullopt.
std::optional<std::int64_t> direction_multiple(const ExpVec& e, const ExpVec& dir) {
    int j = 0;
    while (j < kVarCount && dir[j] == 0) ++j;
    std::int64_t k = e[j] / dir[j];
    if (k < 0 || e[j] % dir[j] != 0) return std::nullopt;
    if (e != exp_scale(dir, k)) return std::nullopt;
    return k;
}

using DensePoly = std::vector<Rational>; // coefficient of y^i at index i

// Degree cap for the dense representation; larger inputs skip the reduction
// (normal form stays valid, equality is semantic anyway).
constexpr std::int64_t kMaxDenseDegree = 1 << 16;

std::optional<DensePoly> to_dense(const LaurentPoly& p, const ExpVec& dir) {
    DensePoly out;
    for (const auto& [e, c] : p.terms()) {
        auto k = direction_multiple(e, dir);
        if (!k || *k > kMaxDenseDegree) return std::nullopt;
        if (static_cast<std::size_t>(*k) >= out.size()) out.resize(*k + 1);
        out[*k] = c;
    }
    return out;
}

void strip(DensePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

using IntPoly = std::vector<BigInt>;

void istrip(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    if (g > 1)
        for (auto& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
}

IntPoly to_integer_primitive(const DensePoly& p) {
    BigInt scale = 1;
    for (const auto& c : p) scale = boost::multiprecision::lcm(scale, denominator(c));
    IntPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = numerator(p[i]) * (scale / denominator(p[i]));
    make_primitive(out);
    return out;
}

// Pseudo-remainder of a by b, made primitive after each degree drop so the
// coefficients stay bounded (primitive PRS).
IntPoly pseudo_mod_primitive(IntPoly a, const IntPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        BigInt la = a.back();
        const BigInt& lb = b.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
        istrip(a);
        make_primitive(a);
    }
    return a;
}

// Monic gcd over the rationals, computed via a primitive PRS over the integers.
DensePoly poly_gcd(const DensePoly& ra, const DensePoly& rb) {
    IntPoly a = to_integer_primitive(ra);
    IntPoly b = to_integer_primitive(rb);
    while (!b.empty()) {
        IntPoly r = pseudo_mod_primitive(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    DensePoly out(a.size());
    if (!a.empty()) {
        for (std::size_t i = 0; i < a.size(); ++i)
            out[i] = make_rational(a[i], a.back());
    }
    return out;
}

DensePoly poly_div_exact(const DensePoly& a, const DensePoly& b) {
    DensePoly rem = a;
    DensePoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (rem.size() >= b.size() && !rem.empty()) {
        Rational q = rem.back() / b.back();
        std::size_t shift = rem.size() - b.size();
        quo[shift] = q;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= q * b[i];
        strip(rem);
    }
    if (!rem.empty()) throw InternalCheckFailure("inexact univariate division during reduction");
    return quo;
}

LaurentPoly from_dense(const DensePoly& p, const ExpVec& dir) {
    LaurentPoly out;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0) out.add_term(exp_scale(dir, static_cast<std::int64_t>(k)), p[k]);
    return out;
}

} // namespace

RingElem::RingElem(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InversionOfZero();
    normalize();
}

RingElem RingElem::from_poly(LaurentPoly p) {
    return RingElem(std::move(p), LaurentPoly::constant(1));
}

RingElem RingElem::constant(const Rational& c) {
    return from_poly(LaurentPoly::constant(c));
}

RingElem RingElem::monomial(const Rational& c, const ExpVec& e) {
    return from_poly(LaurentPoly::monomial(c, e));
}

RingElem RingElem::variable(Var v, std::int64_t exponent) {
    return from_poly(LaurentPoly::variable(v, exponent));
}

void RingElem::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(1);
        return;
    }
    // Divide out the common monomial gcd.
    ExpVec gn = num_.min_exponents();
    ExpVec gd = den_.min_exponents();
    ExpVec g;
    for (int i = 0; i < kVarCount; ++i) g[i] = std::min(gn[i], gd[i]);
    if (!exp_is_zero(g)) {
        num_ = num_.shifted(exp_neg(g));
        den_ = den_.shifted(exp_neg(g));
    }
    // Opportunistic univariate reduction.
    if (auto dir = primitive_direction(num_, den_)) {
        auto dn = to_dense(num_, *dir);
        auto dd = dn ? to_dense(den_, *dir) : std::nullopt;
        if (dn && dd) {
            DensePoly g1 = poly_gcd(*dn, *dd);
            if (g1.size() > 1) {
                num_ = from_dense(poly_div_exact(*dn, g1), *dir);
                den_ = from_dense(poly_div_exact(*dd, g1), *dir);
                ExpVec shift = kZeroExp;
                bool need = false;
                ExpVec mn = num_.min_exponents();
                ExpVec md = den_.min_exponents();
                for (int i = 0; i < kVarCount; ++i) {
                    shift[i] = std::min(mn[i], md[i]);
                    need |= shift[i] != 0;
                }
                if (need) {
                    num_ = num_.shifted(exp_neg(shift));
                    den_ = den_.shifted(exp_neg(shift));
                }
            }
        }
    }
    // Monic denominator.
    const Rational lead = den_.leading().second;
    if (lead != 1) {
        Rational inv = rational_inverse(lead);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    r.num_ = -r.num_;
    return r;
}

RingElem RingElem::operator+(const RingElem& o) const {
    return RingElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RingElem RingElem::operator-(const RingElem& o) const {
    return RingElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RingElem RingElem::operator*(const RingElem& o) const {
    return RingElem(num_ * o.num_, den_ * o.den_);
}

RingElem RingElem::operator/(const RingElem& o) const {
    return *this * o.inverse();
}

RingElem RingElem::inverse() const {
    if (is_zero()) throw InversionOfZero();
    return RingElem(den_, num_);
}

RingElem RingElem::pow(std::int64_t k) const {
    if (k == 0) return RingElem::constant(1);
    RingElem base = k < 0 ? inverse() : *this;
    std::int64_t n = k < 0 ? -k : k;
    RingElem acc = RingElem::constant(1);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return acc;
}

bool RingElem::equals(const RingElem& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RingElem RingElem::substituted(Var v, const ExpVec& target) const {
    LaurentPoly n2 = num_.substituted(v, target);
    LaurentPoly d2 = den_.substituted(v, target);
    if (d2.is_zero())
        throw DenominatorVanishes(std::string("denominator vanishes under substitution of ") +
                                  var_name(v));
    return RingElem(std::move(n2), std::move(d2));
}

Rational RingElem::evaluate(const EvalPoint& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw PoleAtPoint("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

RingElem RingElem::inverted_variables() const {
    return RingElem(num_.inverted_variables(), den_.inverted_variables());
}

namespace {

double poly_eval_double(const LaurentPoly& p,
                        const std::array<std::optional<double>, kVarCount>& point) {
    double sum = 0;
    for (const auto& [e, c] : p.terms()) {
        double term = c.convert_to<double>();
        for (int i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (!point[i])
                throw Error(std::string("variable ") + var_name(static_cast<Var>(i)) +
                            " occurs but is not assigned");
            term *= std::pow(*point[i], static_cast<double>(e[i]));
        }
        sum += term;
    }
    return sum;
}

} // namespace

double RingElem::evaluate_double(
    const std::array<std::optional<double>, kVarCount>& point) const {
    double d = poly_eval_double(den_, point);
    if (d == 0) throw PoleAtPoint("denominator vanishes at the evaluation point");
    return poly_eval_double(num_, point) / d;
}

} // namespace mpv
