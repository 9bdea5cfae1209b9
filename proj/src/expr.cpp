#include "orbcol/expr.hpp"

#include <cctype>

namespace orbcol {

namespace {

class Parser {
public:
    Parser(std::string_view s, const Field& F) : s_(s), F_(F) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = unary();
        for (;;) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                std::size_t at = i_ - 1;
                RatFunc d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RatFunc unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        if (!eat('^')) return base;
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a non-negative integer exponent");
        if (i_ - start > 6) throw ParseError("exponent too large", start);
        return base.pow(std::stol(std::string(s_.substr(start, i_ - start))));
    }

    RatFunc primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            RatFunc r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'l') {
            ++i_;
            return RatFunc::variable(F_);
        }
        if (c == 'g') {
            if (F_.degree() != 2) fail("generator 'g' used without a quadratic field");
            ++i_;
            return RatFunc::constant(F_, F_.generator());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            Integer v(std::string(s_.substr(start, i_ - start)));
            return RatFunc::constant(F_, FieldElem(Rational(v)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const Field& F_;
    std::size_t i_ = 0;
};

}  // namespace

RatFunc parse_expr(std::string_view text, const Field& field) { return Parser(text, field).parse(); }

Poly parse_poly(std::string_view text, const Field& field) {
    RatFunc r = parse_expr(text, field);
    if (!r.is_polynomial()) throw ParseError("expected a polynomial", 0);
    return r.num();  // the denominator is monic, hence 1
}

}  // namespace orbcol
