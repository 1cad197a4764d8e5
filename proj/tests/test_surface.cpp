#include <doctest.h>

#include "mpv/errors.hpp"
#include "mpv/scenarios.hpp"
#include "mpv/surface.hpp"
#include "mpv/zetapv.hpp"

#include "support/builders.hpp"
#include "support/generators.hpp"

using namespace mpv;
using namespace mpv::testgen;

namespace {

MotClass lefschetz(std::int64_t m) { return MotClass::lefschetz_power(1, m); }

} // namespace

TEST_SUITE_BEGIN("surfblow");

TEST_CASE("center specification strings") {
    CHECK(BlowupCenter::parse("free").kind == CenterKind::Free);
    CHECK(BlowupCenter::parse("curve:C2").a == "C2");
    auto dp = BlowupCenter::parse("point:C2,C3");
    CHECK(dp.kind == CenterKind::AtDoublePoint);
    CHECK(dp.a == "C2");
    CHECK(dp.b == "C3");
    CHECK(dp.str() == "point:C2,C3");
    CHECK_THROWS_AS(BlowupCenter::parse("midpoint:C1"), InvalidCenter);
    CHECK_THROWS_AS(BlowupCenter::parse("point:C1"), InvalidCenter);
}

TEST_CASE("figure-2 chain of multiplicities") {
    auto c = scenarios::example34a();
    SurfaceConfig s1 = blowup(c, BlowupCenter::on_curve("C2"), "C3");
    CHECK(s1.find_component("C3")->effective_alpha() == Rational(1, 2)); // coefficient -1/2
    SurfaceConfig s3 = blowup(s1, BlowupCenter::at_double_point("C2", "C3"), "C4");
    CHECK(s3.find_component("C4")->effective_alpha() == Rational(0)); // coefficient -1
    SurfaceConfig s4 = blowup(s3, BlowupCenter::on_curve("C4"), "C5");
    CHECK(s4.find_component("C5")->effective_alpha() == Rational(1)); // coefficient 0

    CHECK(log_poles(s3) == std::vector<std::string>{"C4"});
    CHECK(log_poles(s4) == std::vector<std::string>{"C4"});
    CHECK(validate_surface(s4).ok());
}

TEST_CASE("blow-up strata bookkeeping on the two-lines example") {
    auto c = scenarios::example34a();
    SurfaceConfig s1 = blowup(c, BlowupCenter::on_curve("C2"), "C3");
    CHECK(s1.open_strata.at(make_subset({"C2"})) ==
          lefschetz(2) - MotClass::constant(1)); // L - 1
    CHECK(s1.open_strata.at(make_subset({"C3"})) == lefschetz(2));
    CHECK(s1.open_strata.at(make_subset({"C2", "C3"})) == MotClass::constant(1));
    CHECK(total_class(s1) == total_class(c) + lefschetz(2));

    SurfaceConfig s3 = blowup(s1, BlowupCenter::at_double_point("C2", "C3"), "C4");
    CHECK(s3.open_strata.count(make_subset({"C2", "C3"})) == 0); // count dropped to zero
    CHECK(s3.open_strata.at(make_subset({"C4"})) == lefschetz(2) - MotClass::constant(1));
    CHECK(s3.open_strata.at(make_subset({"C2", "C4"})) == MotClass::constant(1));
    CHECK(s3.open_strata.at(make_subset({"C3", "C4"})) == MotClass::constant(1));
}

TEST_CASE("free center") {
    auto c = scenarios::example34b();
    SurfaceConfig b = blowup(c, BlowupCenter::free_point(), "E");
    CHECK(b.find_component("E")->effective_alpha() == Rational(2));
    CHECK(b.open_strata.at(make_subset({"E"})) == lefschetz(2) + MotClass::constant(1));
    CHECK(total_class(b) == total_class(c) + lefschetz(2));
    CHECK(pv(b, Realization::motivic).expr.equals(pv(c, Realization::motivic).expr));
}

TEST_CASE("blow-up center errors") {
    auto c = scenarios::example34b();
    CHECK_THROWS_AS(blowup(c, BlowupCenter::on_curve("X"), "E"), InvalidCenter);
    CHECK_THROWS_AS(blowup(c, BlowupCenter::on_curve("C1"), "C1"), InvalidCenter);
    CHECK_THROWS_AS(blowup(c, BlowupCenter::at_double_point("C1", "C1"), "E"), InvalidCenter);
    // The two lines meet once; consuming that point twice exhausts it.
    auto once = blowup(scenarios::example34a(), BlowupCenter::at_double_point("C1", "C2"), "E3");
    CHECK_THROWS_AS(blowup(once, BlowupCenter::at_double_point("C1", "C2"), "E4"),
                    ExhaustedDoublePoint);
    // The conic example has no double point at all.
    CHECK_THROWS_AS(blowup(c, BlowupCenter::at_double_point("C1", "C1x"), "E"), InvalidCenter);
}

TEST_CASE("exceptional multiplicities") {
    // Figure 1: tangent branches with alphas 3/2 and -1/2 give alpha_E = 1.
    CHECK(exceptional_alpha(2, {{Rational(3, 2), 1}, {Rational(-1, 2), 1}}) == Rational(1));
    CHECK(exceptional_alpha(2, {}) == Rational(2));
    // Transverse double point agrees with the blowup rule.
    DetRng rng(11);
    for (int i = 0; i < 50; ++i) {
        Rational ai = random_nonzero_rational(rng, 8, 2);
        Rational aj = random_nonzero_rational(rng, 8, 2);
        CHECK(exceptional_alpha(2, {{ai, 1}, {aj, 1}}) == ai + aj);
    }
}

TEST_CASE("invariance reports along the figure-2 chain") {
    auto chain = scenarios::figure2_chain();
    REQUIRE(chain.size() == 4);

    auto first = invariance_report(chain[0].config, chain[1].config);
    CHECK(first.before_defined);
    CHECK(first.after_defined);
    REQUIRE(first.equal.has_value());
    CHECK(*first.equal);
    CHECK(pv(chain[0].config, Realization::motivic).expr.is_zero());
    CHECK(pv(chain[1].config, Realization::motivic).expr.is_zero());

    auto second = invariance_report(chain[1].config, chain[2].config);
    CHECK(second.before_defined);
    CHECK_FALSE(second.after_defined);
    CHECK(second.after_poles == std::vector<std::string>{"C4"});
    CHECK_FALSE(second.equal.has_value());
    CHECK(second.summary().find("not defined") != std::string::npos);

    auto self = invariance_report(chain[0].config, chain[0].config);
    REQUIRE(self.equal.has_value());
    CHECK(*self.equal);
}

TEST_CASE("property: every center kind adds exactly L and preserves pv") {
    DetRng rng(777);
    int done = 0;
    while (done < 300) {
        SurfaceConfig c = random_surface(rng);
        std::string new_id = "X" + std::to_string(done);

        BlowupCenter center = BlowupCenter::free_point();
        switch (done % 3) {
            case 0: break;
            case 1: {
                const auto& comp = c.components[rng.range(0, c.components.size() - 1)];
                center = BlowupCenter::on_curve(comp.id);
                break;
            }
            case 2: {
                std::vector<Subset> pairs;
                for (const auto& [k, cls] : c.open_strata)
                    if (k.size() == 2) pairs.push_back(k);
                if (pairs.empty()) continue; // redraw
                const Subset& p = pairs[rng.range(0, pairs.size() - 1)];
                center = BlowupCenter::at_double_point(p[0], p[1]);
                break;
            }
        }
        SurfaceConfig after = blowup(c, center, new_id);

        CHECK(total_class(after) == total_class(c) + lefschetz(c.m));
        for (const auto& [k, cls] : after.open_strata) CHECK(k.size() <= 2);

        auto report = invariance_report(c, after);
        if (report.before_defined && report.after_defined) {
            REQUIRE(report.equal.has_value());
            CHECK(*report.equal);
        }
        ++done;
    }
}

TEST_CASE("validate_surface flags non-surface data") {
    SurfaceConfig c;
    c.n = 2;
    c.m = 1;
    for (const char* id : {"A", "B", "C"})
        c.components.push_back(ComponentData::with_alpha(id, Rational(1)));
    c.open_strata.emplace(make_subset({"A", "B", "C"}), MotClass::constant(1));
    bool found = false;
    for (const auto& f : validate_surface(c).findings) found |= f.code == "not-snc";
    CHECK(found);

    SurfaceConfig d;
    d.n = 2;
    d.m = 1;
    d.components.push_back(ComponentData::with_alpha("A", Rational(1)));
    d.components.push_back(ComponentData::with_alpha("B", Rational(1)));
    d.open_strata.emplace(make_subset({"A", "B"}), MotClass::from_l(tpoly({{1, 1}}).num()));
    found = false;
    for (const auto& f : validate_surface(d).findings) found |= f.code == "bad-double-point";
    CHECK(found);
}

TEST_SUITE_END();
