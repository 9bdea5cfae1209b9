#include "orbcol/field.hpp"

#include <cctype>

namespace orbcol {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return (!s.empty() && s[0] == '+') ? std::string(s.substr(1)) : std::string(s);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int(text)) throw ParseError("invalid rational '" + std::string(text) + "'", 0);
        return Rational(Integer(strip_plus(text)));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw ParseError("invalid rational '" + std::string(text) + "'", 0);
    Integer d(strip_plus(den));
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    Rational r(Integer(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
    Integer n = sqrt(x.get_num());
    Integer d = sqrt(x.get_den());
    return Rational(n, d);
}

Field Field::quadratic(Integer p, Integer q) {
    Field f;
    f.degree_ = 2;
    f.p_ = std::move(p);
    f.q_ = std::move(q);
    if (sgn(f.discriminant()) >= 0)
        throw MathError("quadratic minimal polynomial must have negative discriminant");
    return f;
}

Field Field::from_minpoly(const std::vector<Rational>& coeffs) {
    if (coeffs.size() < 2 || coeffs.size() > 3)
        throw MathError("minimal polynomial must have degree 1 or 2");
    if (coeffs.back() != 1) throw MathError("minimal polynomial must be monic");
    if (coeffs.size() == 2) {
        Field f;
        f.root_ = -coeffs[0];
        return f;
    }
    if (coeffs[0].get_den() != 1 || coeffs[1].get_den() != 1)
        throw MathError("quadratic minimal polynomial must have integer coefficients");
    return quadratic(coeffs[1].get_num(), coeffs[0].get_num());
}

std::vector<Rational> Field::minpoly() const {
    if (degree_ == 1) return {-root_, Rational(1)};
    return {Rational(q_), Rational(p_), Rational(1)};
}

FieldElem Field::generator() const {
    if (degree_ == 1) return FieldElem(root_);
    return FieldElem(Rational(0), Rational(1));
}

FieldElem Field::reduce(FieldElem x) const {
    if (degree_ == 1) {
        x.c0 += x.c1 * root_;
        x.c1 = 0;
    }
    return x;
}

FieldElem Field::mul(const FieldElem& x, const FieldElem& y) const {
    if (degree_ == 1) return FieldElem(x.c0 * y.c0);
    // t^2 = -p t - q
    Rational hi = x.c1 * y.c1;
    return {x.c0 * y.c0 - hi * q_, x.c0 * y.c1 + x.c1 * y.c0 - hi * p_};
}

FieldElem Field::conj(const FieldElem& x) const {
    if (degree_ == 1) return x;
    // conjugate of t is -p - t
    return {x.c0 - x.c1 * p_, -x.c1};
}

Rational Field::norm(const FieldElem& x) const {
    if (degree_ == 1) return x.c0;
    return mul(x, conj(x)).c0;
}

FieldElem Field::inv(const FieldElem& x) const {
    if (x.is_zero()) throw MathError("inverse of zero in coefficient field");
    if (degree_ == 1) return FieldElem(1 / x.c0);
    Rational n = norm(x);
    FieldElem c = conj(x);
    return {c.c0 / n, c.c1 / n};
}

FieldElem Field::pow(FieldElem x, unsigned long e) const {
    FieldElem r(1);
    while (e) {
        if (e & 1) r = mul(r, x);
        e >>= 1;
        if (e) x = mul(x, x);
    }
    return r;
}

std::optional<FieldElem> Field::sqrt_of_rational(const Rational& c) const {
    if (auto r = rational_sqrt(c)) return FieldElem(*r);
    if (degree_ == 1) return std::nullopt;
    // s = t + p/2 satisfies s^2 = disc/4; want (k s)^2 = c, i.e. k^2 = 4c/disc.
    auto k = rational_sqrt(Rational(4 * c) / Rational(discriminant()));
    if (!k) return std::nullopt;
    return FieldElem(*k * Rational(p_, 2), *k);
}

std::string to_string(const FieldElem& x, const char* generator) {
    if (sgn(x.c1) == 0) return to_string(x.c0);
    std::string s;
    if (sgn(x.c0) != 0) s = to_string(x.c0) + (sgn(x.c1) > 0 ? " + " : " - ");
    else if (sgn(x.c1) < 0) s = "-";
    Rational a = abs(x.c1);
    if (a != 1) s += to_string(a) + "*";
    s += generator;
    return s;
}

}  // namespace orbcol
