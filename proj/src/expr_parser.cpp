#include "mpv/expr_parser.hpp"

#include "mpv/errors.hpp"

#include <cctype>
#include <numeric>

namespace mpv {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::int64_t m) : text_(text), m_(m) {}

    RingElem run() {
        RingElem value = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return value;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c))
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }

    RingElem expr() {
        RingElem value = term();
        while (true) {
            if (consume('+'))
                value = value + term();
            else if (consume('-'))
                value = value - term();
            else
                return value;
        }
    }

    RingElem term() {
        RingElem value = factor();
        while (true) {
            if (consume('*'))
                value = value * factor();
            else if (consume('/')) {
                RingElem d = factor();
                if (d.is_zero()) throw SyntaxError("division by zero", pos_);
                value = value / d;
            } else
                return value;
        }
    }

    RingElem factor() {
        if (consume('-')) return -factor();
        if (consume('+')) return factor();
        return power();
    }

    RingElem power() {
        RingElem base = primary();
        if (!consume('^')) return base;
        auto [p, q] = exponent();
        if (q == 1) return base.pow(p);
        // Fractional exponent: restricted to coefficient-one monomials so the
        // result stays a Laurent monomial in the scaled variables.
        if (!base.den().is_constant() || !base.num().is_monomial() ||
            base.num().leading().second != 1)
            throw SyntaxError("fractional exponent requires a coefficient-one monomial base", pos_);
        ExpVec e = base.num().leading().first;
        ExpVec scaled;
        for (int i = 0; i < kVarCount; ++i) {
            std::int64_t raised = e[i] * p;
            if (raised % q != 0)
                throw ScalingError("exponent denominator does not divide the scaling integer m",
                                   pos_);
            scaled[i] = raised / q;
        }
        return RingElem::monomial(Rational(1), scaled);
    }

    RingElem primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RingElem value = expr();
            expect(')');
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RingElem::constant(Rational(read_bigint()));
        switch (c) {
            case 'L': ++pos_; return RingElem::variable(Var::t, m_);
            case 'T': ++pos_; return RingElem::variable(Var::tau, m_);
            case 'u': ++pos_; return RingElem::variable(Var::U, m_);
            case 'v': ++pos_; return RingElem::variable(Var::V, m_);
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
        }
    }

    // ['+'|'-'] integer | '(' ['+'|'-'] integer ['/' integer] ')'
    std::pair<std::int64_t, std::int64_t> exponent() {
        skip_ws();
        if (consume('(')) {
            std::int64_t p = read_signed_integer();
            std::int64_t q = 1;
            if (consume('/')) {
                q = read_signed_integer();
                if (q <= 0) throw SyntaxError("exponent denominator must be positive", pos_);
            }
            expect(')');
            std::int64_t g = std::gcd(p < 0 ? -p : p, q);
            return g > 1 ? std::pair{p / g, q / g} : std::pair{p, q};
        }
        return {read_signed_integer(), 1};
    }

    std::int64_t read_signed_integer() {
        skip_ws();
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        std::int64_t v = read_integer();
        return neg ? -v : v;
    }

    // Unbounded, for coefficients.
    BigInt read_bigint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected an integer", pos_);
        BigInt v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    // Bounded, for exponents.
    std::int64_t read_integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected an integer", pos_);
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (std::int64_t(1) << 40)) throw SyntaxError("exponent literal too large", pos_);
            ++pos_;
        }
        return v;
    }

    std::string_view text_;
    std::int64_t m_;
    std::size_t pos_ = 0;
};

} // namespace

RingElem parse_expression(std::string_view text, std::int64_t m) {
    if (m <= 0) throw SchemaError("scaling integer m must be positive");
    return Parser(text, m).run();
}

} // namespace mpv
