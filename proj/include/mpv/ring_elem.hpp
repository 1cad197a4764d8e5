#pragma once

#include "mpv/laurent.hpp"

#include <cstdint>

namespace mpv {

// A fraction of Laurent polynomials over the scaled variables; the
// value ring for zeta functions and principal value integrals. Normal form:
//   * the common monomial gcd of num and den is divided out (both become
//     ordinary polynomials with per-variable minimum exponent zero),
//   * when num and den are supported on a single exponent direction they are
//     reduced by the univariate gcd along that direction,
//   * den is monic under the canonical monomial order,
//   * zero is 0/1.
// The normal form is deterministic but NOT canonical across algebraic routes;
// equality is semantic, by cross-multiplication.
class RingElem {
public:
    RingElem() : num_(), den_(LaurentPoly::constant(1)) {}
    RingElem(LaurentPoly num, LaurentPoly den);

    static RingElem from_poly(LaurentPoly p);
    static RingElem constant(const Rational& c);
    static RingElem monomial(const Rational& c, const ExpVec& e);
    static RingElem variable(Var v, std::int64_t exponent = 1);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }
    bool is_tau_free() const { return !uses(Var::tau); }

    RingElem operator-() const;
    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator/(const RingElem& o) const;

    // Throws InversionOfZero on 0.
    RingElem inverse() const;
    RingElem pow(std::int64_t k) const;

    // a/b = c/d  iff  a*d = c*b.
    bool equals(const RingElem& o) const;
    bool operator==(const RingElem& o) const { return equals(o); }

    // var |-> monomial x^target; throws DenominatorVanishes when the image of
    // den is identically zero (a genuine pole of the substitution).
    RingElem substituted(Var v, const ExpVec& target) const;

    // Exact evaluation; throws PoleAtPoint when den vanishes at the point.
    Rational evaluate(const EvalPoint& point) const;

    // Floating-point evaluation for non-rational assignments.
    double evaluate_double(const std::array<std::optional<double>, kVarCount>& point) const;

    // Every variable replaced by its inverse; an involution.
    RingElem inverted_variables() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace mpv
