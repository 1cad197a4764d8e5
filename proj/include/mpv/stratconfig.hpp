#pragma once

#include "mpv/ring_elem.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mpv {

enum class Realization { motivic, hodge };

// The class of a stratum, in one or both homomorphic realizations:
//   lclass — Laurent polynomial in t with exponents multiples of m (a Laurent
//            polynomial in L),
//   hodge  — polynomial in U, V with exponents multiples of m (a Hodge
//            polynomial in u, v).
struct MotClass {
    std::optional<LaurentPoly> lclass;
    std::optional<LaurentPoly> hodge;

    static MotClass from_l(LaurentPoly p);
    static MotClass from_hodge(LaurentPoly p);
    static MotClass from_both(LaurentPoly l, LaurentPoly h);
    // Constant c in both realizations.
    static MotClass constant(const Rational& c);
    // The class of L^k together with its Hodge image (uv)^k, for scaling m.
    static MotClass lefschetz_power(std::int64_t k, std::int64_t m);

    bool has(Realization r) const;
    const LaurentPoly& get(Realization r) const; // throws MissingRealization
    bool is_zero() const;                        // every stored realization zero

    MotClass operator+(const MotClass& o) const; // realization-wise; keeps the intersection
    MotClass operator-(const MotClass& o) const;
    MotClass operator*(const MotClass& o) const;
    bool operator==(const MotClass& o) const;
};

// Component of the divisor, with either an alpha multiplicity (alpha - 1 is
// the multiplicity in div omega^{1/d}) or resolution data (nu - 1 the
// multiplicity in the relative canonical divisor, N the multiplicity in the
// pulled-back divisor).
struct ComponentData {
    std::string id;
    std::optional<Rational> alpha;
    std::optional<std::pair<Rational, Rational>> resolution; // (nu, N)

    static ComponentData with_alpha(std::string id, Rational a);
    static ComponentData with_resolution(std::string id, Rational nu, Rational N);

    bool has_alpha() const { return alpha.has_value(); }
    bool has_resolution() const { return resolution.has_value(); }
    // alpha, or nu + N in resolution form.
    Rational effective_alpha() const;
};

// Subsets of the component index set are sorted vectors of component ids.
using Subset = std::vector<std::string>;

Subset make_subset(std::vector<std::string> ids);
bool subset_contains(const Subset& sub, const std::string& id);
bool is_subset_of(const Subset& a, const Subset& b);

// A stratified normal-crossings configuration: the combinatorial shadow of
// (Y, div omega^{1/d}) or of a log resolution. Empty strata are omitted.
struct StratifiedConfig {
    int n = 0;           // ambient dimension
    std::int64_t m = 1;  // scaling integer
    std::vector<ComponentData> components;
    std::map<Subset, MotClass> open_strata;

    const ComponentData* find_component(const std::string& id) const;
    // True when every stored stratum carries the realization.
    bool has_realization(Realization r) const;
};

struct ValidationFinding {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationFinding> findings;
    bool ok() const { return findings.empty(); }
};

ValidationReport validate(const StratifiedConfig& c);

// Sum of all open strata classes (the class of the ambient variety).
MotClass total_class(const StratifiedConfig& c);

// Closed strata E_I with explicit dimensions (needed by duality checks; not
// inferred from classes).
struct ClosedStratum {
    MotClass cls;
    int dim = 0;
};

struct ClosedStrataInput {
    int n = 0;
    std::int64_t m = 1;
    std::vector<std::string> component_ids;
    std::map<Subset, ClosedStratum> closed;
};

ValidationReport validate_closed(const ClosedStrataInput& cs);

// Möbius inversion [E_I°] = sum_{J ⊇ I} (-1)^{|J\I|} [E_J]; zero results are
// dropped.
std::map<Subset, MotClass> open_from_closed(const ClosedStrataInput& cs);

// [E_I] = sum_{J ⊇ I} [E_J°], over every subset of a stored stratum key.
std::map<Subset, MotClass> closed_from_open(const StratifiedConfig& c);

// Replaces strata classes by the supplied intersected classes (the relative
// setting over a constructible W); keys absent from c must map to zero.
StratifiedConfig restrict_to(const StratifiedConfig& c, const std::map<Subset, MotClass>& w);

} // namespace mpv
