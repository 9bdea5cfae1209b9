#pragma once

// Naive affine group law on a single fiber over K = Q or Q[t]/(t^2 + p t + q),
// with elements as rational pairs. Independent of the library's arithmetic.

#include "orbcol/ratfunc.hpp"

#include <optional>

namespace oracle {

using orbcol::Rational;

struct K {
    Rational p = 0, q = 0;
    bool quadratic = false;

    struct E {
        Rational a = 0, b = 0;
        bool operator==(const E& o) const { return a == o.a && b == o.b; }
        bool zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    };

    E add(const E& x, const E& y) const { return {x.a + y.a, x.b + y.b}; }
    E sub(const E& x, const E& y) const { return {x.a - y.a, x.b - y.b}; }
    E mul(const E& x, const E& y) const {
        // t^2 = -p t - q
        Rational tt = x.b * y.b;
        return {x.a * y.a - q * tt, x.a * y.b + x.b * y.a - p * tt};
    }
    E inv(const E& x) const {
        // x * conj(x) = norm, conj(a + b t) = (a - b p) - b t
        E c{x.a - x.b * p, -x.b};
        Rational n = mul(x, c).a;
        return {c.a / n, c.b / n};
    }
    E scalar(long s) const { return {Rational(s), 0}; }

    E from(const orbcol::FieldElem& f) const { return {f.c0, f.c1}; }

    E eval(const orbcol::Poly& f, const E& x) const {
        E acc;
        auto cs = f.coeffs();
        for (std::size_t i = cs.size(); i-- > 0;) acc = add(mul(acc, x), from(cs[i]));
        return acc;
    }
    std::optional<E> eval(const orbcol::RatFunc& f, const E& x) const {
        E d = eval(f.den(), x);
        if (d.zero()) return std::nullopt;
        return mul(eval(f.num(), x), inv(d));
    }
};

inline K field_of(const orbcol::Field& F) {
    K k;
    if (F.degree() == 2) {
        k.quadratic = true;
        k.p = Rational(F.p());
        k.q = Rational(F.q());
    }
    return k;
}

struct Pt {
    bool inf = true;
    K::E x, y;
    bool operator==(const Pt& o) const { return inf == o.inf && (inf || (x == o.x && y == o.y)); }
};

struct Curve {
    K k;
    K::E A, B;

    bool on(const Pt& P) const {
        if (P.inf) return true;
        K::E lhs = k.mul(P.y, P.y);
        K::E rhs = k.add(k.add(k.mul(k.mul(P.x, P.x), P.x), k.mul(A, P.x)), B);
        return lhs == rhs;
    }
    Pt neg(const Pt& P) const { return P.inf ? P : Pt{false, P.x, k.sub({}, P.y)}; }
    Pt add(const Pt& P, const Pt& R) const {
        if (P.inf) return R;
        if (R.inf) return P;
        K::E s;
        if (P.x == R.x) {
            if (k.add(P.y, R.y).zero()) return {};
            K::E num = k.add(k.mul(k.scalar(3), k.mul(P.x, P.x)), A);
            s = k.mul(num, k.inv(k.mul(k.scalar(2), P.y)));
        } else {
            s = k.mul(k.sub(R.y, P.y), k.inv(k.sub(R.x, P.x)));
        }
        K::E x3 = k.sub(k.sub(k.mul(s, s), P.x), R.x);
        K::E y3 = k.sub(k.mul(s, k.sub(P.x, x3)), P.y);
        return {false, x3, y3};
    }
    Pt mul(long n, const Pt& P) const {
        Pt acc;
        Pt base = n < 0 ? neg(P) : P;
        for (long i = 0; i < (n < 0 ? -n : n); ++i) acc = add(acc, base);
        return acc;
    }
};

}  // namespace oracle
