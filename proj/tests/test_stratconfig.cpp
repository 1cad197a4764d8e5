#include <doctest.h>

#include "mpv/errors.hpp"
#include "mpv/scenarios.hpp"
#include "mpv/stratconfig.hpp"

#include "support/builders.hpp"
#include "support/generators.hpp"

using namespace mpv;
using namespace mpv::testgen;

namespace {

LaurentPoly lpoly(std::int64_t m, std::initializer_list<std::pair<std::int64_t, std::int64_t>> cs) {
    LaurentPoly p;
    for (const auto& [c, k] : cs) p.add_term(exps(k * m), Rational(c));
    return p;
}

bool has_finding(const ValidationReport& r, const std::string& code) {
    for (const auto& f : r.findings)
        if (f.code == code) return true;
    return false;
}

} // namespace

TEST_SUITE_BEGIN("stratconfig");

TEST_CASE("validate accepts the two-lines example") {
    CHECK(validate(scenarios::example34a()).ok());
    CHECK(validate(scenarios::example34b()).ok());
}

TEST_CASE("validate flags oversized strata and scaling mismatches") {
    StratifiedConfig c;
    c.n = 1;
    c.m = 2;
    c.components.push_back(ComponentData::with_alpha("A", Rational(1, 2)));
    c.components.push_back(ComponentData::with_alpha("B", Rational(1, 2)));
    c.open_strata.emplace(make_subset({"A", "B"}), MotClass::constant(1));
    CHECK(has_finding(validate(c), "stratum-dimension-negative"));

    StratifiedConfig d;
    d.n = 2;
    d.m = 2;
    d.components.push_back(ComponentData::with_alpha("A", Rational(1, 3)));
    CHECK(has_finding(validate(d), "scaling-mismatch"));

    StratifiedConfig e;
    e.n = 2;
    e.m = 1;
    e.components.push_back(ComponentData::with_resolution("A", Rational(0), Rational(1)));
    CHECK(has_finding(validate(e), "non-canonical")); // nu < 1
}

TEST_CASE("dual-realization consistency triggers exactly on uv-diagonal classes") {
    // Diagonal and wrong: flagged.
    MotClass bad = MotClass::from_both(lpoly(2, {{1, 1}}), LaurentPoly::monomial(Rational(2), exps(0, 0, 2, 2)));
    StratifiedConfig c;
    c.n = 2;
    c.m = 2;
    c.open_strata.emplace(Subset{}, bad);
    CHECK(has_finding(validate(c), "realization-mismatch"));

    // Non-diagonal Hodge class: the comparison does not apply.
    MotClass offdiag = MotClass::from_both(lpoly(2, {{1, 1}}),
                                           LaurentPoly::monomial(Rational(1), exps(0, 0, 4, 2)));
    StratifiedConfig d;
    d.n = 2;
    d.m = 2;
    d.open_strata.emplace(Subset{}, offdiag);
    CHECK_FALSE(has_finding(validate(d), "realization-mismatch"));

    // Diagonal and consistent: clean.
    MotClass good = MotClass::lefschetz_power(1, 2);
    StratifiedConfig e;
    e.n = 2;
    e.m = 2;
    e.open_strata.emplace(Subset{}, good);
    CHECK(validate(e).ok());
}

TEST_CASE("total_class of the worked examples is [P^2]") {
    MotClass p2 = MotClass::from_both(lpoly(2, {{1, 0}, {1, 1}, {1, 2}}),
                                      [] {
                                          LaurentPoly h;
                                          h.add_term(exps(0, 0, 0, 0), Rational(1));
                                          h.add_term(exps(0, 0, 2, 2), Rational(1));
                                          h.add_term(exps(0, 0, 4, 4), Rational(1));
                                          return h;
                                      }());
    CHECK(total_class(scenarios::example34a()) == p2);
    CHECK(total_class(scenarios::example34b()) == p2);
}

TEST_CASE("total_class of the empty divisor is the ambient class") {
    StratifiedConfig c;
    c.n = 3;
    c.m = 1;
    MotClass x = MotClass::from_l(lpoly(1, {{1, 3}, {5, 1}}));
    c.open_strata.emplace(Subset{}, x);
    CHECK(total_class(c) == x);
}

TEST_CASE("Möbius inversion on two lines in the plane") {
    ClosedStrataInput cs;
    cs.n = 2;
    cs.m = 2;
    cs.component_ids = {"C1", "C2"};
    cs.closed.emplace(Subset{}, ClosedStratum{MotClass::from_l(lpoly(2, {{1, 0}, {1, 1}, {1, 2}})), 2});
    cs.closed.emplace(make_subset({"C1"}), ClosedStratum{MotClass::from_l(lpoly(2, {{1, 0}, {1, 1}})), 1});
    cs.closed.emplace(make_subset({"C2"}), ClosedStratum{MotClass::from_l(lpoly(2, {{1, 0}, {1, 1}})), 1});
    cs.closed.emplace(make_subset({"C1", "C2"}), ClosedStratum{MotClass::from_l(lpoly(2, {{1, 0}})), 0});
    CHECK(validate_closed(cs).ok());

    auto open = open_from_closed(cs);
    CHECK(open.at(make_subset({"C1"})) == MotClass::from_l(lpoly(2, {{1, 1}})));
    CHECK(open.at(make_subset({"C2"})) == MotClass::from_l(lpoly(2, {{1, 1}})));
    CHECK(open.at(make_subset({"C1", "C2"})) == MotClass::from_l(lpoly(2, {{1, 0}})));
    CHECK(open.at(Subset{}) == MotClass::from_l(lpoly(2, {{-1, 1}, {1, 2}})));
}

TEST_CASE("Möbius inversion, single component") {
    ClosedStrataInput cs;
    cs.n = 2;
    cs.m = 1;
    cs.component_ids = {"C"};
    MotClass total = MotClass::from_l(lpoly(1, {{1, 0}, {1, 1}, {1, 2}}));
    MotClass curve = MotClass::from_l(lpoly(1, {{3, 0}, {1, 1}}));
    cs.closed.emplace(Subset{}, ClosedStratum{total, 2});
    cs.closed.emplace(make_subset({"C"}), ClosedStratum{curve, 1});
    auto open = open_from_closed(cs);
    CHECK(open.at(make_subset({"C"})) == curve);
    CHECK(open.at(Subset{}) == total - curve);
}

TEST_CASE("three general-position lines give open line classes L - 1") {
    auto c = scenarios::p2_lines({Rational(-1), Rational(-1), Rational(2)});
    REQUIRE(c.m == 1); // integer alphas
    for (const auto& id : {"C1", "C2", "C3"})
        CHECK(c.open_strata.at(make_subset({id})) ==
              MotClass::from_both(lpoly(1, {{-1, 0}, {1, 1}}), [] {
                  LaurentPoly h;
                  h.add_term(kZeroExp, Rational(-1));
                  h.add_term(exps(0, 0, 1, 1), Rational(1));
                  return h;
              }()));
}

TEST_CASE("closed_from_open on the worked examples") {
    auto closed_a = closed_from_open(scenarios::example34a());
    CHECK(closed_a.at(make_subset({"C1"})).lclass == lpoly(2, {{1, 0}, {1, 1}}));
    CHECK(closed_a.at(Subset{}) == total_class(scenarios::example34a()));
    auto closed_b = closed_from_open(scenarios::example34b());
    CHECK(closed_b.at(make_subset({"C1"})).lclass == lpoly(2, {{1, 0}, {1, 1}}));
}

TEST_CASE("property: open/closed round trip is the identity") {
    DetRng rng(101);
    for (int i = 0; i < 100; ++i) {
        StratifiedConfig c = random_config(rng);
        auto closed = closed_from_open(c);
        ClosedStrataInput cs;
        cs.n = c.n;
        cs.m = c.m;
        for (const auto& comp : c.components) cs.component_ids.push_back(comp.id);
        for (const auto& [subset, cls] : closed)
            cs.closed.emplace(subset, ClosedStratum{cls, c.n - static_cast<int>(subset.size())});
        auto open = open_from_closed(cs);
        CHECK(open == c.open_strata);

        // The all-strata sum is preserved.
        StratifiedConfig round = c;
        round.open_strata = open;
        CHECK(total_class(round) == total_class(c));
    }
}

TEST_CASE("restrict: full strata map is the identity, zero map empties") {
    auto c = scenarios::example34a();
    CHECK(restrict_to(c, c.open_strata).open_strata == c.open_strata);

    std::map<Subset, MotClass> zero;
    StratifiedConfig emptied = restrict_to(c, zero);
    CHECK(emptied.open_strata.empty());

    std::map<Subset, MotClass> unknown;
    unknown.emplace(make_subset({"C1", "C2", "C1x"}), MotClass::constant(1));
    CHECK_THROWS_AS(restrict_to(c, unknown), UnknownStratum);
}

TEST_SUITE_END();
