#include "orbcol/elliptic.hpp"

#include <algorithm>
#include <cstdlib>

namespace orbcol {

namespace {

RatFunc cst(const Field& F, long c) { return RatFunc::constant(F, FieldElem(c)); }

// Slope of the chord or tangent; nullopt when the sum is infinity.
std::optional<RatFunc> slope(const CurveFF& C, const PointFF& P, const PointFF& R) {
    if (P.x() == R.x()) {
        if (P.y() != R.y() || P.y().is_zero()) return std::nullopt;
        const Field& F = C.field();
        return (cst(F, 3) * P.x() * P.x() + C.A()) / (cst(F, 2) * P.y());
    }
    return (R.y() - P.y()) / (R.x() - P.x());
}

}  // namespace

CurveFF CurveFF::make(RatFunc A, RatFunc B) {
    if (A.field() != B.field()) throw MathError("curve coefficients over different fields");
    const Field& F = A.field();
    RatFunc four_a3 = cst(F, 4) * A * A * A;
    RatFunc disc = cst(F, -16) * (four_a3 + cst(F, 27) * B * B);
    if (disc.is_zero()) throw MathError("degenerate curve: the discriminant vanishes identically");
    return CurveFF(std::move(A), std::move(B), std::move(disc));
}

RatFunc CurveFF::j_invariant() const {
    const Field& F = field();
    RatFunc four_a3 = cst(F, 4) * A_ * A_ * A_;
    return cst(F, 1728) * four_a3 / (four_a3 + cst(F, 27) * B_ * B_);
}

bool on_curve(const CurveFF& C, const PointFF& P) {
    if (P.is_infinity()) return true;
    if (P.x().field() != C.field() || P.y().field() != C.field()) return false;
    return P.y() * P.y() == (P.x() * P.x() + C.A()) * P.x() + C.B();
}

void require_on_curve(const CurveFF& C, const PointFF& P, const char* what) {
    if (!on_curve(C, P)) throw MathError(std::string(what) + " does not lie on the curve");
}

PointFF negate(const PointFF& P) {
    if (P.is_infinity()) return P;
    return PointFF(P.x(), -P.y());
}

PointFF add_unchecked(const CurveFF& C, const PointFF& P, const PointFF& R) {
    if (P.is_infinity()) return R;
    if (R.is_infinity()) return P;
    auto s = slope(C, P, R);
    if (!s) return PointFF::infinity();
    RatFunc x3 = *s * *s - P.x() - R.x();
    RatFunc y3 = *s * (P.x() - x3) - P.y();
    return PointFF(std::move(x3), std::move(y3));
}

PointFF add(const CurveFF& C, const PointFF& P, const PointFF& R) {
    require_on_curve(C, P, "first summand");
    require_on_curve(C, R, "second summand");
    return add_unchecked(C, P, R);
}

PointFF scalar_mul(const CurveFF& C, long n, const PointFF& P) {
    if (n < 0) return negate(scalar_mul(C, -n, P));
    PointFF acc, base = P;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1) acc = add_unchecked(C, acc, base);
        e >>= 1;
        if (e) base = add_unchecked(C, base, base);
    }
    return acc;
}

const PointFF& Multiples::at(long k) {
    if (k < 0) throw MathError("Multiples::at needs k >= 0");
    while (static_cast<long>(list_.size()) <= k) list_.push_back(add_unchecked(C_, list_.back(), list_[1]));
    return list_[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// Division polynomials

namespace {

using XP = std::vector<RatFunc>;

void xp_trim(XP& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

XP xp_mul(const XP& a, const XP& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    XP r(a.size() + b.size() - 1, RatFunc(F));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    xp_trim(r);
    return r;
}

XP xp_sub(XP a, const XP& b, const Field& F) {
    if (a.size() < b.size()) a.resize(b.size(), RatFunc(F));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    xp_trim(a);
    return a;
}

}  // namespace

RatFunc XPoly::eval(const RatFunc& x) const {
    RatFunc acc(x.field());
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

std::vector<XPoly> division_polys(const CurveFF& C, long nmax) {
    const Field& F = C.field();
    const RatFunc &A = C.A(), &B = C.B();
    std::vector<XP> f(static_cast<std::size_t>(std::max(nmax, 4L)) + 1);
    f[0] = {};
    f[1] = {cst(F, 1)};
    f[2] = {cst(F, 1)};
    f[3] = {-(A * A), cst(F, 12) * B, cst(F, 6) * A, RatFunc(F), cst(F, 3)};
    // psi_4 = 4y (x^6 + 5A x^4 + 20B x^3 - 5A^2 x^2 - 4AB x - 8B^2 - A^3)
    f[4] = {cst(F, -16) * B * B - cst(F, 2) * A * A * A, cst(F, -8) * A * B, cst(F, -10) * A * A, cst(F, 40) * B,
            cst(F, 10) * A, RatFunc(F), cst(F, 2)};
    // (2y)^4 = 16 (x^3 + A x + B)^2
    XP cubic{B, A, RatFunc(F), cst(F, 1)};
    XP y4 = xp_mul(cubic, cubic, F);
    for (auto& c : y4) c = cst(F, 16) * c;
    auto cube = [&](const XP& a) { return xp_mul(xp_mul(a, a, F), a, F); };
    for (long n = 5; n <= nmax; ++n) {
        long m = n / 2;
        auto at = [&](long k) -> const XP& { return f[static_cast<std::size_t>(k)]; };
        XP r;
        if (n % 2 == 1) {
            XP t1 = xp_mul(at(m + 2), cube(at(m)), F);
            XP t2 = xp_mul(at(m - 1), cube(at(m + 1)), F);
            if (m % 2 == 0) t1 = xp_mul(t1, y4, F);
            else t2 = xp_mul(t2, y4, F);
            r = xp_sub(t1, t2, F);
        } else {
            XP t1 = xp_mul(at(m + 2), xp_mul(at(m - 1), at(m - 1), F), F);
            XP t2 = xp_mul(at(m - 2), xp_mul(at(m + 1), at(m + 1), F), F);
            r = xp_mul(at(m), xp_sub(t1, t2, F), F);
        }
        f[static_cast<std::size_t>(n)] = std::move(r);
    }
    std::vector<XPoly> out;
    for (long n = 0; n <= nmax; ++n) out.push_back(XPoly{f[static_cast<std::size_t>(n)]});
    return out;
}

XPoly division_poly(const CurveFF& C, long n) {
    if (n < 1) throw MathError("division polynomial index must be positive");
    return division_polys(C, n)[static_cast<std::size_t>(n)];
}

bool psi_vanishes(const CurveFF& C, const std::vector<XPoly>& f, long n, const PointFF& P) {
    (void)C;
    if (P.is_infinity()) return true;
    if (n % 2 == 0 && P.y().is_zero()) return true;
    return f.at(static_cast<std::size_t>(n)).eval(P.x()).is_zero();
}

// ---------------------------------------------------------------------------
// Complex multiplication

std::optional<CMEndo> detect_cm(const CurveFF& C) {
    const Field& F = C.field();
    if (C.B().is_zero()) {
        auto i = F.sqrt_of_rational(-1);
        if (!i) return std::nullopt;
        // u = -i: (x, y) -> (-x, i y), a square root of [-1].
        return CMEndo{-*i, *i, OrderSpec::make(1, 1)};
    }
    if (C.A().is_zero()) {
        auto s = F.sqrt_of_rational(-3);
        if (!s) return std::nullopt;
        FieldElem omega = make_rational(1, 2) * (*s - FieldElem(1));
        // u = -omega^2 = 1 + omega: (x, y) -> (omega x, -y), a root of T^2 - T + 1.
        return CMEndo{FieldElem(1) + omega, omega, OrderSpec::make(3, 1)};
    }
    return std::nullopt;
}

bool admits(const CurveFF& C, const CMEndo& e) {
    const Field& F = C.field();
    FieldElem u2 = F.sqr(e.u);
    FieldElem u4 = F.sqr(u2), u6 = F.mul(u4, u2);
    return C.A().scaled(u4) == C.A() && C.B().scaled(u6) == C.B();
}

PointFF apply_theta(const CurveFF& C, const CMEndo& e, const PointFF& P) {
    if (P.is_infinity()) return P;
    const Field& F = C.field();
    FieldElem u2 = F.sqr(e.u);
    return PointFF(P.x().scaled(u2), P.y().scaled(F.mul(u2, e.u)));
}

PointFF cm_apply(const CurveFF& C, const CMEndo& e, const OrderElem& alpha, const PointFF& P) {
    if (!admits(C, e)) throw MathError("the curve does not admit this CM automorphism");
    if (!(alpha.spec == e.order)) throw MathError("order element does not belong to the curve's CM order");
    PointFF a = scalar_mul(C, alpha.a, P);
    if (alpha.b == 0) return a;
    return add_unchecked(C, a, scalar_mul(C, alpha.b, apply_theta(C, e, P)));
}

// ---------------------------------------------------------------------------
// Relation searches

std::optional<long> find_relation_A(const CurveFF& C, const PointFF& P, const PointFF& Q, long K) {
    Multiples mp(C, P);
    PointFF negQ = negate(Q);
    for (long k = 1; k <= K; ++k) {
        const PointFF& R = mp.at(k);
        if (R == Q) return k;
        if (R == negQ) return -k;
    }
    return std::nullopt;
}

std::optional<std::pair<long, long>> find_relation_B(const CurveFF& C, const PointFF& P1, const PointFF& P2, long K) {
    Multiples m1(C, P1), m2(C, P2);
    for (long k2 = 1; k2 <= K; ++k2) m2.at(k2);
    for (long k1 = 1; k1 <= K; ++k1) {
        const PointFF& R = m1.at(k1);
        PointFF negR = negate(R);
        for (long k2 = -K; k2 <= K; ++k2) {
            if (k2 == 0) continue;
            const PointFF& S = m2.at(std::labs(k2));
            if (k2 < 0 ? S == negR : S == R) return std::make_pair(k1, k2);
        }
    }
    return std::nullopt;
}

std::vector<OrderElem> box_elements(const OrderSpec& spec, long box) {
    std::vector<OrderElem> out;
    for (long r = 1; r <= box; ++r)
        for (long a = -r; a <= r; ++a)
            for (long b = -r; b <= r; ++b)
                if (std::max(std::labs(a), std::labs(b)) == r) out.push_back({spec, a, b});
    return out;
}

std::optional<CTriple> find_relation_C(const CurveFF& C, const PointFF& P1, const PointFF& P2, const PointFF& Q,
                                       const CMEndo& e, long box) {
    if (!admits(C, e)) throw MathError("the curve does not admit this CM automorphism");
    auto elems = box_elements(e.order, box);
    auto images = [&](const PointFF& P) {
        Multiples mp(C, P), mt(C, apply_theta(C, e, P));
        std::vector<PointFF> out;
        for (const auto& x : elems) out.push_back(add_unchecked(C, mp.signed_at(x.a), mt.signed_at(x.b)));
        return out;
    };
    auto i1 = images(P1), i2 = images(P2), iq = images(Q);
    for (std::size_t a = 0; a < elems.size(); ++a) {
        for (std::size_t b = 0; b < elems.size(); ++b) {
            // alpha1 / alpha2 rational iff a1 b2 = a2 b1.
            if (elems[a].a * elems[b].b == elems[b].a * elems[a].b) continue;
            if (i1[a] != i2[b]) continue;
            for (std::size_t c = 0; c < elems.size(); ++c)
                if (iq[c] == i1[a]) return CTriple{elems[a], elems[b], elems[c]};
        }
    }
    return std::nullopt;
}

bool is_isotrivial(const CurveFF& C) { return C.j_invariant().is_constant(); }

bool is_constant_section(const PointFF& P) { return P.is_infinity() || (P.x().is_constant() && P.y().is_constant()); }

std::string to_string(const PointFF& P, const char* var, const char* generator) {
    if (P.is_infinity()) return "O";
    return "(" + to_string(P.x(), var, generator) + ", " + to_string(P.y(), var, generator) + ")";
}

}  // namespace orbcol
