#pragma once

#include "mpv/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>

namespace mpv {

// Scaled variables, in the fixed order used for the canonical monomial ordering.
// With a per-computation scaling integer m:  t^m = L,  tau^m = T (= L^{-s}),
// U^m = u, V^m = v.
enum class Var : int { t = 0, tau = 1, U = 2, V = 3 };

inline constexpr int kVarCount = 4;
inline constexpr std::array<Var, 4> kAllVars{Var::t, Var::tau, Var::U, Var::V};

const char* var_name(Var v);

// Integer exponent vector indexed by Var; lexicographic std::array order gives
// the canonical monomial ordering.
using ExpVec = std::array<std::int64_t, kVarCount>;

inline constexpr ExpVec kZeroExp{0, 0, 0, 0};

inline std::int64_t& at(ExpVec& e, Var v) { return e[static_cast<int>(v)]; }
inline std::int64_t at(const ExpVec& e, Var v) { return e[static_cast<int>(v)]; }

ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);
ExpVec exp_neg(const ExpVec& a);
ExpVec exp_scale(const ExpVec& a, std::int64_t k);
bool exp_is_zero(const ExpVec& a);

// The point of evaluation: one exact value per variable (absent = unassigned).
using EvalPoint = std::array<std::optional<Rational>, kVarCount>;

// Sparse Laurent polynomial over the four scaled variables: a finite map from
// exponent vectors to nonzero rational coefficients. The zero polynomial is
// the empty map; no zero coefficient is ever stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const Rational& c);
    static LaurentPoly monomial(const Rational& c, const ExpVec& e);
    static LaurentPoly variable(Var v, std::int64_t exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Exactly one term.
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }

    // Accumulates c into the coefficient at e, erasing it when it cancels.
    void add_term(const ExpVec& e, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    // Canonical-representation equality (maps compare term by term).
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    bool uses(Var v) const;
    // Per-variable minimum exponent over all terms; requires a nonzero polynomial.
    ExpVec min_exponents() const;
    // Largest term in the canonical monomial order; requires a nonzero polynomial.
    const std::pair<const ExpVec, Rational>& leading() const;

    // Multiplication by the monomial x^delta.
    LaurentPoly shifted(const ExpVec& delta) const;
    // var |-> monomial x^target (coefficient one); terms may merge.
    LaurentPoly substituted(Var v, const ExpVec& target) const;
    // e |-> -e on every term (the duality involution at polynomial level).
    LaurentPoly inverted_variables() const;

    // Exact evaluation; every used variable must be assigned, and negative
    // exponents require a nonzero value (else PoleAtPoint).
    Rational evaluate(const EvalPoint& point) const;

private:
    std::map<ExpVec, Rational> terms_;
};

} // namespace mpv
