#include <doctest.h>

#include "mpv/errors.hpp"
#include "mpv/scenarios.hpp"
#include "mpv/zetapv.hpp"

#include "support/builders.hpp"
#include "support/numeric_oracle.hpp"

using namespace mpv;
using namespace mpv::testgen;

namespace {

MotClass ambient_class(int dim, std::int64_t m) {
    // [P^n] = L^n + ... + 1
    MotClass acc = MotClass::from_both(LaurentPoly(), LaurentPoly());
    for (int k = 0; k <= dim; ++k)
        acc = acc + MotClass::lefschetz_power(k, m);
    return acc;
}

} // namespace

TEST_SUITE_BEGIN("scenarios");

TEST_CASE("example builders validate and reproduce the published values") {
    auto a = scenarios::example34a();
    CHECK(validate_surface(a).ok());
    CHECK(pv(a, Realization::motivic).expr.is_zero());
    CHECK(total_class(a) == ambient_class(2, 2));

    auto b = scenarios::example34b();
    CHECK(validate_surface(b).ok());
    CHECK(pv(b, Realization::motivic).expr.equals(-mono(-3) * tpoly({{1, 2}, {1, 1}, {1, 0}})));
    CHECK(total_class(b) == ambient_class(2, 2));
}

TEST_CASE("p1points requires the canonical degree and no poles") {
    auto c = scenarios::p1_points({Rational(3, 2), Rational(1, 2), Rational(-1)});
    CHECK(validate(c).ok());
    CHECK(total_class(c) == ambient_class(1, 2));
    CHECK(c.open_strata.at(Subset{}) ==
          MotClass::lefschetz_power(1, 2) - MotClass::constant(2)); // L - 2

    CHECK_THROWS_AS(scenarios::p1_points({Rational(1), Rational(1)}), ConstraintViolated);
    CHECK_THROWS_AS(scenarios::p1_points({Rational(0), Rational(0), Rational(1)}),
                    ConstraintViolated);
}

TEST_CASE("p2lines(2) with alphas -1/2 is exactly the two-lines example") {
    auto lines = scenarios::p2_lines({Rational(-1, 2), Rational(-1, 2)});
    auto a = scenarios::example34a();
    CHECK(lines.n == a.n);
    CHECK(lines.m == a.m);
    CHECK(lines.open_strata == a.open_strata);
    CHECK(pv(lines, Realization::motivic).expr.is_zero());
    CHECK_THROWS_AS(scenarios::p2_lines({Rational(1)}), ConstraintViolated);
}

TEST_CASE("p2lines satisfies validate and the ambient total for several k") {
    for (int k = 1; k <= 5; ++k) {
        std::vector<Rational> alphas(k, Rational(1));
        alphas[0] = Rational(1 - 3); // close the degree: sum(alpha-1) = -3
        if (alphas[0] == 0) continue;
        auto c = scenarios::p2_lines(alphas);
        CHECK(validate_surface(c).ok());
        CHECK(total_class(c) == ambient_class(2, c.m));
    }
}

TEST_CASE("figure-2 chain stage labels and published multiplicity chain") {
    auto chain = scenarios::figure2_chain();
    REQUIRE(chain.size() == 4);
    CHECK(chain[0].label == "P2");
    CHECK(chain[1].center->str() == "curve:C2");
    CHECK(chain[2].center->str() == "point:C2,C3");
    CHECK(chain[3].center->str() == "curve:C4");
    // Coefficients in div omega^{1/2} are alpha - 1: -1/2, -1, 0.
    CHECK(chain[3].config.find_component("C3")->effective_alpha() - 1 == Rational(-1, 2));
    CHECK(chain[3].config.find_component("C4")->effective_alpha() - 1 == Rational(-1));
    CHECK(chain[3].config.find_component("C5")->effective_alpha() - 1 == Rational(0));
    for (const auto& stage : chain) CHECK(validate_surface(stage.config).ok());
}

TEST_CASE("figure-1 multiplicity scenario") {
    auto fig = scenarios::figure1_multiplicity();
    CHECK(fig.alpha == Rational(1));
    CHECK(fig.coefficient == Rational(0));
}

TEST_CASE("products multiply strata classes and raise the dimension") {
    auto base = scenarios::example34b();
    MotClass p1 = ambient_class(1, 2);
    StratifiedConfig prod = scenarios::product_with(base, p1, 1);
    CHECK(prod.n == 3);
    CHECK(validate(prod).ok());
    CHECK(total_class(prod) == total_class(base) * p1);

    // pv(product(c, M)) = M * L^{-dim M} * pv(c), checked symbolically.
    RingElem lhs = pv(prod, Realization::motivic).expr;
    RingElem rhs = RingElem::from_poly(p1.get(Realization::motivic)) * mono(-2) *
                   pv(base, Realization::motivic).expr;
    CHECK(lhs.equals(rhs));
}

TEST_CASE("random_canonical is deterministic, valid, and canonical-degree") {
    for (auto family : {scenarios::Family::p1, scenarios::Family::p2lines}) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            StratifiedConfig c = scenarios::random_canonical(seed, family, 3, 5);
            CHECK(validate(c).ok());
            CHECK(log_poles(c).empty());
            Rational degree = 0;
            for (const auto& comp : c.components) degree += comp.effective_alpha() - 1;
            CHECK(degree == (family == scenarios::Family::p1 ? -2 : -3));

            StratifiedConfig again = scenarios::random_canonical(seed, family, 3, 5);
            CHECK(again.open_strata == c.open_strata);
            REQUIRE(again.components.size() == c.components.size());
            for (std::size_t i = 0; i < c.components.size(); ++i)
                CHECK(again.components[i].effective_alpha() == c.components[i].effective_alpha());
        }
    }
}

TEST_CASE("random_canonical families satisfy the functional equation") {
    // (see also the acceptance suite, which runs the full counts)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        StratifiedConfig c = scenarios::random_canonical(seed, scenarios::Family::p1, 2, 5);
        ClosedStrataInput cs;
        cs.n = c.n;
        cs.m = c.m;
        std::vector<Rational> alphas;
        for (const auto& comp : c.components) {
            cs.component_ids.push_back(comp.id);
            alphas.push_back(comp.effective_alpha());
        }
        for (const auto& [k, cls] : closed_from_open(c))
            cs.closed.emplace(k, ClosedStratum{cls, c.n - static_cast<int>(k.size())});
        CHECK(functional_equation_check(cs, alphas).holds);
    }
}

TEST_SUITE_END();
