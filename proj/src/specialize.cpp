#include "orbcol/specialize.hpp"

#include <algorithm>
#include <functional>

namespace orbcol {

Base Base::rational(const Field& field, const Rational& lambda0) {
    Base b;
    b.rational_ = true;
    b.modulus_ = Poly::variable(field) - Poly::constant(field, FieldElem(lambda0));
    return b;
}

Base Base::algebraic(const Poly& h) {
    if (h.is_constant()) throw MathError("base modulus must have positive degree");
    Base b;
    b.modulus_ = h.monic();
    return b;
}

Rational Base::value() const {
    if (!rational_) throw MathError("algebraic base has no rational value");
    return -modulus_.coeff(0).c0;
}

namespace {

FieldElem root_of_linear(const Poly& h) { return -h.coeff(0); }

QuotElem reduce(const RatFunc& f, const Poly& h) {
    if (h.degree() == 1) return QuotElem::constant(h, f.eval(root_of_linear(h)));
    QuotElem num(h, f.num());
    if (f.is_polynomial()) return QuotElem(h, f.num().scaled(h.field().inv(f.den().coeff(0))));
    auto inv = quot_invert(QuotElem(h, f.den()));
    if (!std::holds_alternative<Inverse>(inv)) throw BadFiber("denominator vanishes on the base", std::get<Split>(inv).first);
    return num * std::get<Inverse>(inv).value;
}

QuotElem constant_like(const QuotElem& ref, long c) { return QuotElem::constant(ref.modulus(), FieldElem(c)); }

FiberPoint infinity_on(const FiberPoint& ref, const Poly& g) {
    FiberPoint r;
    r.modulus = g;
    r.A = ref.A.restrict_to(g);
    r.B = ref.B.restrict_to(g);
    r.infinity = true;
    return r;
}

FiberPoint affine(const FiberPoint& ref, QuotElem x, QuotElem y) {
    FiberPoint r;
    r.modulus = ref.modulus;
    r.A = ref.A;
    r.B = ref.B;
    r.infinity = false;
    r.x = std::move(x);
    r.y = std::move(y);
    return r;
}

using Branches = std::vector<FiberPoint>;

// Runs on_unit on the part of the modulus where e is invertible and on_zero
// where it vanishes.
Branches branch_on(const QuotElem& e, const std::function<Branches(const Poly&, const QuotElem&)>& on_unit,
                   const std::function<Branches(const Poly&)>& on_zero) {
    if (e.is_zero()) return on_zero(e.modulus());
    auto r = quot_invert(e);
    if (auto* inv = std::get_if<Inverse>(&r)) return on_unit(e.modulus(), inv->value);
    const Split& s = std::get<Split>(r);
    Branches out = on_zero(s.first);
    QuotElem rest = e.restrict_to(s.second);
    auto inv2 = quot_invert(rest);
    if (!std::holds_alternative<Inverse>(inv2)) throw InternalError("split part not invertible");
    Branches more = on_unit(s.second, std::get<Inverse>(inv2).value);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

Poly monic_product(const std::vector<Poly>& ps, const Field& F) {
    Poly r = Poly::constant(F, FieldElem(1));
    for (const auto& p : ps) r *= p;
    return r.monic();
}

std::vector<BranchVerdict> merge(const std::vector<BranchVerdict>& vs) {
    std::vector<Poly> yes, no;
    const Field* F = nullptr;
    for (const auto& v : vs) {
        F = &v.modulus.field();
        (v.holds ? yes : no).push_back(v.modulus);
    }
    std::vector<BranchVerdict> out;
    if (!yes.empty()) out.push_back({monic_product(yes, *F), true});
    if (!no.empty()) out.push_back({monic_product(no, *F), false});
    std::sort(out.begin(), out.end(), [](const BranchVerdict& a, const BranchVerdict& b) {
        return compare(a.modulus, b.modulus) < 0;
    });
    return out;
}

void check_base(const CurveFF& C, const Poly& h, const std::vector<const PointFF*>& points) {
    Poly g = gcd(h, bad_fiber_locus(C));
    if (!g.is_constant()) throw BadFiber("bad fiber at " + to_string(g), g);
    for (const PointFF* P : points) {
        if (P->is_infinity()) continue;
        Poly gp = gcd(h, pole_locus(*P));
        if (!gp.is_constant()) throw BadFiber("section has a pole at " + to_string(gp), gp);
    }
}

}  // namespace

FieldElem FiberPoint::x_value() const {
    if (infinity || modulus.degree() != 1) throw MathError("fiber point has no single affine value");
    return x.residue().coeff(0);
}

FieldElem FiberPoint::y_value() const {
    if (infinity || modulus.degree() != 1) throw MathError("fiber point has no single affine value");
    return y.residue().coeff(0);
}

bool FiberPoint::on_curve() const {
    if (infinity) return true;
    return (y * y - ((x * x + A) * x + B)).is_zero();
}

FiberPoint FiberPoint::restrict_to(const Poly& factor) const {
    if (factor == modulus) return *this;
    FiberPoint r;
    r.modulus = factor.monic();
    r.A = A.restrict_to(factor);
    r.B = B.restrict_to(factor);
    r.infinity = infinity;
    if (!infinity) {
        r.x = x.restrict_to(factor);
        r.y = y.restrict_to(factor);
    }
    return r;
}

Poly bad_fiber_locus(const CurveFF& C) {
    Poly p = C.discriminant().num() * C.A().den() * C.B().den();
    return squarefree_part(p);
}

Poly pole_locus(const PointFF& P) {
    if (P.is_infinity()) return Poly::constant(Field(), FieldElem(1));
    return squarefree_part(P.x().den() * P.y().den());
}

FiberPoint specialize(const CurveFF& C, const PointFF& P, const Base& base) {
    const Poly& h = base.modulus();
    if (h.field() != C.field()) throw MathError("base and curve over different fields");
    check_base(C, h, {&P});
    FiberPoint r;
    r.modulus = h;
    r.A = reduce(C.A(), h);
    r.B = reduce(C.B(), h);
    r.infinity = P.is_infinity();
    if (!r.infinity) {
        r.x = reduce(P.x(), h);
        r.y = reduce(P.y(), h);
    }
    return r;
}

FiberPoint fiber_negate(const FiberPoint& P) {
    if (P.infinity) return P;
    return affine(P, P.x, -P.y);
}

std::vector<FiberPoint> fiber_add(const FiberPoint& P, const FiberPoint& R) {
    if (P.modulus != R.modulus) throw MathError("fiber points on different branches");
    if (P.infinity) return {R};
    if (R.infinity) return {P};
    QuotElem dx = R.x - P.x;
    auto chord = [&](const Poly& g, const QuotElem& inv) -> Branches {
        FiberPoint Pg = P.restrict_to(g), Rg = R.restrict_to(g);
        QuotElem s = (Rg.y - Pg.y) * inv;
        QuotElem x3 = s * s - Pg.x - Rg.x;
        QuotElem y3 = s * (Pg.x - x3) - Pg.y;
        return {affine(Pg, x3, y3)};
    };
    auto same_x = [&](const Poly& g) -> Branches {
        FiberPoint Pg = P.restrict_to(g), Rg = R.restrict_to(g);
        // x1 = x2, so y1 = +-y2 pointwise; y1 + y2 invertible means y1 = y2.
        QuotElem sy = Pg.y + Rg.y;
        auto tangent = [&](const Poly& g2, const QuotElem& inv) -> Branches {
            FiberPoint Q = Pg.restrict_to(g2);
            QuotElem s = (constant_like(Q.x, 3) * Q.x * Q.x + Q.A) * inv;
            QuotElem x3 = s * s - constant_like(Q.x, 2) * Q.x;
            QuotElem y3 = s * (Q.x - x3) - Q.y;
            return {affine(Q, x3, y3)};
        };
        auto opposite = [&](const Poly& g2) -> Branches { return {infinity_on(Pg, g2)}; };
        return branch_on(sy, tangent, opposite);
    };
    return branch_on(dx, chord, same_x);
}

namespace {

Branches mul_rec(const FiberPoint& acc, const FiberPoint& base, unsigned long e) {
    if (e == 0) return {acc};
    Branches next = (e & 1) ? fiber_add(acc, base) : Branches{acc};
    if ((e >> 1) == 0) return next;
    Branches out;
    for (const auto& a : next) {
        FiberPoint b = base.restrict_to(a.modulus);
        for (const auto& d : fiber_add(b, b)) {
            Branches sub = mul_rec(a.restrict_to(d.modulus), d, e >> 1);
            out.insert(out.end(), sub.begin(), sub.end());
        }
    }
    return out;
}

}  // namespace

std::vector<FiberPoint> fiber_scalar_mul(long n, const FiberPoint& P) {
    Branches r = mul_rec(infinity_on(P, P.modulus), P, static_cast<unsigned long>(n < 0 ? -n : n));
    if (n < 0)
        for (auto& b : r) b = fiber_negate(b);
    return r;
}

std::vector<BranchVerdict> fiber_equal(const FiberPoint& P, const FiberPoint& R) {
    if (P.modulus != R.modulus) throw MathError("fiber points on different branches");
    const Poly& h = P.modulus;
    if (P.infinity || R.infinity) return {{h, P.infinity == R.infinity}};
    Poly g = gcd(h, (P.x - R.x).residue());
    if (!g.is_constant()) g = gcd(g, (P.y - R.y).residue());
    if (g.is_constant()) return {{h, false}};
    if (g.degree() == h.degree()) return {{h, true}};
    return merge({{g, true}, {exact_quotient(h, g).monic(), false}});
}

std::vector<BranchVerdict> compare_specialized(const Poly& h, const PointFF& lhs, const PointFF& rhs) {
    const Field& F = h.field();
    Poly one = Poly::constant(F, FieldElem(1));
    auto zero_part = [&](const PointFF& R) { return R.is_infinity() ? h.monic() : gcd(h, R.x().den()); };
    Poly lz = zero_part(lhs), rz = zero_part(rhs);
    Poly both = gcd(lz, rz);
    std::vector<BranchVerdict> vs;
    if (!both.is_constant()) vs.push_back({both, true});
    Poly lonly = exact_quotient(lz, both), ronly = exact_quotient(rz, both);
    if (!lonly.is_constant()) vs.push_back({lonly.monic(), false});
    if (!ronly.is_constant()) vs.push_back({ronly.monic(), false});
    Poly none = exact_quotient(h.monic(), (lz * ronly).monic());
    if (!none.is_constant()) {
        none = none.monic();
        // Both affine on `none`: compare cross-multiplied numerators.
        Poly dx = lhs.x().num() * rhs.x().den() - rhs.x().num() * lhs.x().den();
        Poly eq = gcd(none, dx);
        if (!eq.is_constant()) {
            Poly dy = lhs.y().num() * rhs.y().den() - rhs.y().num() * lhs.y().den();
            eq = gcd(eq, dy);
        }
        if (!eq.is_constant()) vs.push_back({eq, true});
        Poly ne = exact_quotient(none, eq);
        if (!ne.is_constant()) vs.push_back({ne.monic(), false});
    }
    return merge(vs);
}

std::vector<BranchVerdict> verify_relation_at(const CurveFF& C, const Base& base, const Relation& rel,
                                              VerifyMethod method) {
    const Poly& h = base.modulus();
    if (h.field() != C.field()) throw MathError("base and curve over different fields");
    if (method == VerifyMethod::Auto)
        method = base.is_rational() ? VerifyMethod::FiberArithmetic : VerifyMethod::GenericSpecialization;

    if (const auto* mr = std::get_if<MultipleRelation>(&rel)) {
        check_base(C, h, {&mr->P, &mr->Q});
        if (method == VerifyMethod::GenericSpecialization)
            return compare_specialized(h, scalar_mul(C, mr->m, mr->P), mr->Q);
        FiberPoint Pf = specialize(C, mr->P, base), Qf = specialize(C, mr->Q, base);
        std::vector<BranchVerdict> out;
        for (const auto& b : fiber_scalar_mul(mr->m, Pf)) {
            auto v = fiber_equal(b, Qf.restrict_to(b.modulus));
            out.insert(out.end(), v.begin(), v.end());
        }
        return merge(out);
    }
    const auto& kr = std::get<KillRelation>(rel);
    check_base(C, h, {&kr.Q});
    if (method == VerifyMethod::GenericSpecialization)
        return compare_specialized(h, cm_apply(C, kr.endo, kr.alpha, kr.Q), PointFF::infinity());
    if (!admits(C, kr.endo)) throw MathError("the curve does not admit this CM automorphism");
    FiberPoint Qf = specialize(C, kr.Q, base);
    FiberPoint Tq = Qf;
    if (!Qf.infinity) {
        const Field& F = C.field();
        FieldElem u2 = F.sqr(kr.endo.u), u3 = F.mul(u2, kr.endo.u);
        Tq = affine(Qf, QuotElem::constant(h, u2) * Qf.x, QuotElem::constant(h, u3) * Qf.y);
    }
    std::vector<BranchVerdict> out;
    for (const auto& a : fiber_scalar_mul(kr.alpha.a, Qf)) {
        for (const auto& b : fiber_scalar_mul(kr.alpha.b, Tq.restrict_to(a.modulus))) {
            for (const auto& s : fiber_add(a.restrict_to(b.modulus), b)) out.push_back({s.modulus, s.infinity});
        }
    }
    return merge(out);
}

bool fiber_over_Q(const FiberPoint& P) {
    if (P.modulus.degree() != 1 || !P.modulus.is_rational()) return false;
    auto rat = [](const QuotElem& q) { return q.residue().is_rational(); };
    if (!rat(P.A) || !rat(P.B)) return false;
    return P.infinity || (rat(P.x) && rat(P.y));
}

std::vector<TorsionAt> torsion_order_at(const FiberPoint& P, long Nmax) {
    if (Nmax < 1) throw MathError("torsion bound must be positive");
    bool overQ = fiber_over_Q(P);
    long bound = overQ ? std::min(Nmax, 12L) : Nmax;
    std::vector<TorsionAt> out;
    std::function<void(const FiberPoint&, long)> rec = [&](const FiberPoint& acc, long n) {
        if (acc.infinity) {
            out.push_back({acc.modulus, TorsionAt::Kind::Order, n, false});
            return;
        }
        if (n == bound) {
            out.push_back({acc.modulus, TorsionAt::Kind::ExceedsBound, bound, overQ && bound == 12});
            return;
        }
        for (const auto& s : fiber_add(acc, P.restrict_to(acc.modulus))) rec(s, n + 1);
    };
    rec(P, 1);
    std::sort(out.begin(), out.end(), [](const TorsionAt& a, const TorsionAt& b) { return compare(a.modulus, b.modulus) < 0; });
    return out;
}

}  // namespace orbcol
