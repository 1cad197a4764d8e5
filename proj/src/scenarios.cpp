#include "mpv/scenarios.hpp"

#include "mpv/errors.hpp"

#include <numeric>

namespace mpv {

DetRng::DetRng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

std::uint64_t DetRng::next() {
    // splitmix64; stable across platforms.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t DetRng::range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::int64_t DetRng::nonzero(std::int64_t bound) {
    while (true) {
        std::int64_t v = range(-bound, bound);
        if (v != 0) return v;
    }
}

namespace scenarios {

namespace {

// c0 + c1 L + c2 L^2 in both realizations, for scaling m.
MotClass l_polynomial(std::int64_t m, std::initializer_list<std::int64_t> coefs) {
    MotClass acc = MotClass::from_both(LaurentPoly(), LaurentPoly());
    std::int64_t k = 0;
    for (auto c : coefs) {
        acc = acc + MotClass::lefschetz_power(k, m) * MotClass::constant(c);
        ++k;
    }
    return acc;
}

} // namespace

SurfaceConfig example34a() {
    SurfaceConfig c;
    c.n = 2;
    c.m = 2;
    c.components.push_back(ComponentData::with_alpha("C1", Rational(-1, 2)));
    c.components.push_back(ComponentData::with_alpha("C2", Rational(-1, 2)));
    c.open_strata.emplace(Subset{}, l_polynomial(2, {0, -1, 1}));                // L^2 - L
    c.open_strata.emplace(make_subset({"C1"}), l_polynomial(2, {0, 1}));          // L
    c.open_strata.emplace(make_subset({"C2"}), l_polynomial(2, {0, 1}));          // L
    c.open_strata.emplace(make_subset({"C1", "C2"}), MotClass::constant(1));      // 1 point
    return c;
}

SurfaceConfig example34b() {
    SurfaceConfig c;
    c.n = 2;
    c.m = 2;
    c.components.push_back(ComponentData::with_alpha("C1", Rational(-1, 2)));
    c.open_strata.emplace(Subset{}, l_polynomial(2, {0, 0, 1}));                  // L^2
    c.open_strata.emplace(make_subset({"C1"}), l_polynomial(2, {1, 1}));          // L + 1
    return c;
}

BlowupChain figure2_chain() {
    BlowupChain chain;
    chain.push_back({"P2", example34a(), std::nullopt, std::nullopt});

    auto extend = [&chain](const std::string& label, const BlowupCenter& center,
                           const std::string& new_id) {
        const SurfaceConfig& prev = chain.back().config;
        chain.push_back({label, blowup(prev, center, new_id), center, new_id});
    };
    extend("S1", BlowupCenter::on_curve("C2"), "C3");
    extend("S3", BlowupCenter::at_double_point("C2", "C3"), "C4");
    extend("S4", BlowupCenter::on_curve("C4"), "C5");
    return chain;
}

ExceptionalMultiplicity figure1_multiplicity() {
    ExceptionalMultiplicity fig;
    fig.codim = 2;
    fig.branches = {{Rational(3, 2), 1}, {Rational(-1, 2), 1}};
    fig.alpha = exceptional_alpha(fig.codim, fig.branches);
    fig.coefficient = fig.alpha - 1;
    return fig;
}

namespace {

std::int64_t common_denominator(const std::vector<Rational>& values) {
    std::int64_t m = 1;
    for (const auto& v : values) {
        std::int64_t d = denominator(v).convert_to<std::int64_t>();
        m = std::lcm(m, d);
    }
    return m;
}

void check_alphas(const std::vector<Rational>& alphas, int expected_degree,
                  const char* family) {
    Rational degree = 0;
    for (const auto& a : alphas) {
        if (a == 0)
            throw ConstraintViolated(std::string(family) + ": alpha = 0 is a logarithmic pole");
        degree += a - 1;
    }
    if (degree != expected_degree)
        throw ConstraintViolated(std::string(family) + ": sum(alpha_i - 1) must be " +
                                 std::to_string(expected_degree) + ", got " +
                                 rational_string(degree));
}

} // namespace

StratifiedConfig p1_points(const std::vector<Rational>& alphas) {
    check_alphas(alphas, -2, "p1points");
    StratifiedConfig c;
    c.n = 1;
    c.m = common_denominator(alphas);
    std::int64_t k = static_cast<std::int64_t>(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i)
        c.components.push_back(ComponentData::with_alpha("P" + std::to_string(i + 1), alphas[i]));
    // P^1 minus k points.
    MotClass ambient = l_polynomial(c.m, {1 - k, 1});
    if (!ambient.is_zero()) c.open_strata.emplace(Subset{}, ambient);
    for (const auto& comp : c.components)
        c.open_strata.emplace(make_subset({comp.id}), MotClass::constant(1));
    return c;
}

SurfaceConfig p2_lines(const std::vector<Rational>& alphas) {
    check_alphas(alphas, -3, "p2lines");
    SurfaceConfig c;
    c.n = 2;
    c.m = common_denominator(alphas);
    std::int64_t k = static_cast<std::int64_t>(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i)
        c.components.push_back(ComponentData::with_alpha("C" + std::to_string(i + 1), alphas[i]));

    // Each line in general position meets the k-1 others.
    MotClass line_open = l_polynomial(c.m, {2 - k, 1});
    MotClass total = l_polynomial(c.m, {1, 1, 1}); // [P^2]
    MotClass ambient = total;
    for (std::int64_t i = 0; i < k; ++i) ambient = ambient - line_open;
    ambient = ambient - MotClass::constant(Rational(k * (k - 1) / 2));

    if (!ambient.is_zero()) c.open_strata.emplace(Subset{}, ambient);
    for (const auto& comp : c.components)
        if (!line_open.is_zero()) c.open_strata.emplace(make_subset({comp.id}), line_open);
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            c.open_strata.emplace(make_subset({c.components[i].id, c.components[j].id}),
                                  MotClass::constant(1));
    return c;
}

StratifiedConfig product_with(const StratifiedConfig& base, const MotClass& factor,
                              int dim_factor) {
    if (dim_factor < 0) throw ConstraintViolated("product factor dimension must be >= 0");
    StratifiedConfig out = base;
    out.n = base.n + dim_factor;
    for (auto& [key, cls] : out.open_strata) cls = cls * factor;
    return out;
}

StratifiedConfig random_canonical(std::uint64_t seed, Family family, int d_max, int k_max) {
    if (d_max < 1 || k_max < 1) throw ConstraintViolated("d_max and k_max must be >= 1");
    DetRng rng(seed ^ (family == Family::p1 ? 0x70310000ULL : 0x70320000ULL));
    std::int64_t d = rng.range(1, d_max);
    std::int64_t target_sum_offset = family == Family::p1 ? -2 : -3;

    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::int64_t k = rng.range(1, k_max);
        std::vector<Rational> alphas;
        Rational sum = 0;
        for (std::int64_t i = 0; i + 1 < k; ++i) {
            Rational a(rng.nonzero(3 * d), d);
            alphas.push_back(a);
            sum += a;
        }
        // Last alpha closes the canonical degree constraint exactly.
        Rational last = Rational(target_sum_offset) + k - sum;
        if (last == 0) continue;
        alphas.push_back(last);
        return family == Family::p1 ? p1_points(alphas)
                                    : static_cast<StratifiedConfig>(p2_lines(alphas));
    }
    throw ConstraintViolated("random_canonical failed to draw a valid configuration");
}

} // namespace scenarios
} // namespace mpv
