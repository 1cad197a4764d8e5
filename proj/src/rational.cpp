#include "mpv/rational.hpp"

#include "mpv/errors.hpp"

#include <cctype>
#include <sstream>

namespace mpv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_integer(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw SyntaxError("empty integer");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        ++i;
    }
    if (i == s.size()) throw SyntaxError("sign without digits in integer");
    BigInt value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw SyntaxError(std::string("invalid digit '") + s[i] + "' in integer");
        value = value * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-value) : value;
}

} // namespace

Rational make_rational(BigInt n, BigInt d) {
    if (d == 0) throw InversionOfZero();
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

Rational rational_inverse(const Rational& r) {
    if (r == 0) throw InversionOfZero();
    return make_rational(denominator(r), numerator(r));
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw SyntaxError("zero denominator in rational literal");
    return make_rational(num, den);
}

std::string rational_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

Rational rational_pow(const Rational& base, std::int64_t e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw PoleAtPoint("zero raised to a negative power");
        return Rational(0);
    }
    const auto n = static_cast<unsigned>(e < 0 ? -e : e);
    BigInt p = boost::multiprecision::pow(numerator(base), n);
    BigInt q = boost::multiprecision::pow(denominator(base), n);
    return e > 0 ? make_rational(p, q) : make_rational(q, p);
}

namespace {

// Largest r with r^n <= x, for x >= 0.
BigInt integer_nth_root(const BigInt& x, unsigned n) {
    if (x <= 1) return x;
    BigInt lo = 1, hi = x;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, n) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::optional<BigInt> exact_integer_root(const BigInt& x, unsigned n) {
    bool neg = x < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    BigInt mag = neg ? BigInt(-x) : x;
    BigInt r = integer_nth_root(mag, n);
    if (boost::multiprecision::pow(r, n) != mag) return std::nullopt;
    return neg ? BigInt(-r) : r;
}

} // namespace

std::optional<Rational> rational_nth_root(const Rational& x, unsigned n) {
    if (n == 0) return std::nullopt;
    if (n == 1) return x;
    auto p = exact_integer_root(numerator(x), n);
    if (!p) return std::nullopt;
    auto q = exact_integer_root(denominator(x), n);
    if (!q) return std::nullopt;
    return make_rational(*p, *q);
}

std::optional<std::int64_t> scaled_integer(const Rational& r, std::int64_t m) {
    Rational scaled = r * m;
    if (denominator(scaled) != 1) return std::nullopt;
    return numerator(scaled).convert_to<std::int64_t>();
}

} // namespace mpv
