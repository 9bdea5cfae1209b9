#include "orbcol/ratfunc.hpp"

namespace orbcol {

RatFunc::RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(num_.field(), FieldElem(1))) {}

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw MathError("rational function with zero denominator");
    if (num.field() != den.field()) throw MathError("numerator and denominator over different fields");
    if (num.is_zero()) {
        num_ = Poly(num.field());
        den_ = Poly::constant(num.field(), FieldElem(1));
        return;
    }
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
        num = exact_quotient(num, g);
        den = exact_quotient(den, g);
    }
    FieldElem lc_inv = den.field().inv(den.leading());
    num_ = num.scaled(lc_inv);
    den_ = den.scaled(lc_inv);
}

FieldElem RatFunc::constant_value() const {
    if (!is_constant()) throw MathError("rational function is not constant");
    return num_.coeff(0);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, true); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
    if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, true);
    if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, true);
    // With g = gcd(d1, d2): n1 (d2/g) + n2 (d1/g) over d1 d2 / g, then reduce by g.
    Poly g = gcd(a.den_, b.den_);
    if (g.is_constant()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, true);
    Poly d1 = exact_quotient(a.den_, g), d2 = exact_quotient(b.den_, g);
    Poly n = a.num_ * d2 + b.num_ * d1;
    return RatFunc(n, d1 * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
    // Cross-cancel before multiplying.
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly n1 = g1.is_constant() ? a.num_ : exact_quotient(a.num_, g1);
    Poly d2 = g1.is_constant() ? b.den_ : exact_quotient(b.den_, g1);
    Poly n2 = g2.is_constant() ? b.num_ : exact_quotient(b.num_, g2);
    Poly d1 = g2.is_constant() ? a.den_ : exact_quotient(a.den_, g2);
    Poly num = n1 * n2, den = d1 * d2;
    FieldElem lc_inv = den.field().inv(den.leading());
    return RatFunc(num.scaled(lc_inv), den.scaled(lc_inv), true);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw MathError("division by the zero rational function");
    FieldElem lc_inv = field().inv(num_.leading());
    return RatFunc(den_.scaled(lc_inv), num_.scaled(lc_inv), true);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::scaled(const FieldElem& c) const {
    if (c.is_zero()) return RatFunc(field());
    return RatFunc(num_.scaled(c), den_, true);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    // Coprime parts stay coprime under powers.
    return RatFunc(num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e)), true);
}

FieldElem RatFunc::eval(const FieldElem& x) const {
    FieldElem d = den_.eval(x);
    if (d.is_zero()) throw MathError("rational function has a pole at the evaluation point");
    return field().div(num_.eval(x), d);
}

std::string to_string(const RatFunc& f, const char* var, const char* generator) {
    std::string n = to_string(f.num(), var, generator);
    if (f.is_polynomial()) return n;
    std::string d = to_string(f.den(), var, generator);
    auto wrap = [](const Poly& p, std::string s) {
        bool simple = p.degree() <= 0 || s.find_first_of("+-", 1) == std::string::npos;
        return simple && s.find('*') == std::string::npos && s.find('/') == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(f.num(), n) + "/" + wrap(f.den(), d);
}

}  // namespace orbcol
