#include "doctest.h"

#include "orbcol/collision.hpp"
#include "support/brute.hpp"
#include "support/instances.hpp"

#include <map>

using namespace orbcol;
using instances::L;
using instances::q;

namespace {

Poly lin(const Rational& r, const Field& F = Field()) { return Poly::from_coeffs(F, {FieldElem(-r), FieldElem(1)}); }

bool all_hold(const std::vector<BranchVerdict>& v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [](const BranchVerdict& b) { return b.holds; });
}

struct CMTriple {
    Family fam = family_j1728();
    CMEndo e = *detect_cm(fam.curve);
    PointFF P2 = apply_theta(fam.curve, e, fam.P);
    PointFF Q = add(fam.curve, fam.P, P2);
};

}  // namespace

TEST_CASE("condition polynomial: sentinel and rejections") {
    auto s = family_standard();
    const auto& C = s.curve;
    auto cp = condition_poly(C, s.P, scalar_mul(C, 2, s.P), 2);
    CHECK(cp.identically_satisfied);
    CHECK_THROWS_AS(condition_poly(C, s.P, *s.Q, 0), MathError);
    CHECK_THROWS_AS(condition_poly(C, s.P, PointFF(L(), q(2)), 1), MathError);
    CHECK_FALSE(condition_poly_by_numerators(C, s.P, scalar_mul(C, 2, s.P), 2));
}

TEST_CASE("condition polynomial: excluded bad fibers") {
    // y^2 = x^3 + (l^3 - l^2) x, Q = -P: no good-fiber solutions. Here
    // P - Q = [2]P has polynomial coordinates, so nothing needs excluding.
    Field Q;
    CurveFF C = CurveFF::make(L() * L() * L() - L() * L(), RatFunc(Q));
    PointFF P(L(), L() * L());
    auto cp = condition_poly(C, P, negate(P), 1);
    CHECK_FALSE(cp.identically_satisfied);
    CHECK(cp.poly.is_one());
    CHECK(cp.excluded.empty());
    CHECK(scalar_mul(C, 2, P).x().is_polynomial());

    // [3]P = -P has its solutions at the 4-torsion of P; those on bad fibers go.
    auto c3 = condition_poly(C, P, negate(P), 3);
    for (const auto& e : c3.excluded) CHECK(divides(e, bad_fiber_locus(C)));
    CHECK(gcd(c3.poly, bad_fiber_locus(C)).is_one());
}

TEST_CASE("condition polynomial: standard family base case") {
    auto s = family_standard();
    // P - Q = (4/l^2 - l, ...): the only solution is l = 0.
    auto cp = condition_poly(s.curve, s.P, *s.Q, 1);
    CHECK(cp.poly == lin(0));
    CHECK(cp.excluded.empty());
}

TEST_CASE("condition polynomial: planted roots") {
    for (const auto& pl : instances::planted_instances()) {
        CAPTURE(pl.l0);
        auto E = *oracle::fiber(pl.C, pl.l0);
        auto p = *oracle::point_at(E, pl.P, pl.l0), t = *oracle::point_at(E, pl.Q, pl.l0);
        REQUIRE(E.mul(pl.m, p) == t);
        for (long k = 1; k <= 12; ++k) REQUIRE_FALSE(E.mul(k, p).inf);
        auto cp = condition_poly(pl.C, pl.P, pl.Q, pl.m);
        CHECK(divides(lin(pl.l0), cp.poly));
        for (const auto& r : rational_roots(cp.poly)) {
            auto v = verify_relation_at(pl.C, Base::rational(Field(), r), MultipleRelation{pl.P, pl.m, pl.Q});
            CHECK(all_hold(v));
        }
    }
}

TEST_CASE("condition polynomial: both constructions agree") {
    CMTriple cm;
    auto s = family_standard();
    auto z = family_j0();
    PointFF zQ = apply_theta(z.curve, *detect_cm(z.curve), z.P);
    std::vector<std::tuple<CurveFF, PointFF, PointFF>> cases = {
        {s.curve, s.P, *s.Q},
        {s.curve, *s.Q, s.P},
        {s.curve, s.P, PointFF::infinity()},
        {cm.fam.curve, cm.fam.P, cm.Q},
        {cm.fam.curve, cm.P2, cm.Q},
        {z.curve, z.P, zQ},
    };
    for (const auto& pl : instances::planted_instances()) cases.emplace_back(pl.C, pl.P, pl.Q);
    for (const auto& [C, P, Q] : cases) {
        for (long m = -5; m <= 5; ++m) {
            if (m == 0) continue;
            CAPTURE(m);
            auto cp = condition_poly(C, P, Q, m);
            auto alt = condition_poly_by_numerators(C, P, Q, m);
            REQUIRE(alt);
            CHECK(*alt == cp.poly);
            for (const auto& e : cp.excluded) CHECK(gcd(e, cp.poly).is_one());
        }
    }
}

TEST_CASE("condition polynomial: no rational solution is missed") {
    for (const auto& pl : instances::planted_instances()) {
        std::vector<Poly> polys;
        for (long m = -6; m <= 6; ++m) polys.push_back(m ? condition_poly(pl.C, pl.P, pl.Q, m).poly : Poly());
        for (const auto& l0 : brute::small_rationals(8)) {
            auto f = brute::good_fiber(pl.C, {pl.P, pl.Q}, l0);
            if (!f) continue;
            for (long m : brute::multipliers(f->curve, f->points[0], f->points[1], 6)) {
                CAPTURE(m);
                CHECK(divides(lin(l0), polys[static_cast<std::size_t>(m + 6)]));
            }
        }
    }
}

TEST_CASE("curve through two sections") {
    auto C = curve_through_two_sections(L(), q(1), q(0), q(1));
    CHECK(C.A() == -L() * L());
    CHECK(C.B() == q(1));
    CHECK(curve_through_two_sections(q(0), q(1), L(), q(1)) == C);
    CHECK_THROWS_AS(curve_through_two_sections(L(), q(1), L(), q(2)), MathError);
    // Through (0, 0) and (1, 0) the cubic is x^3 - x: fine. Through (0,0), (1,1): A = 0, B = 0, singular.
    CHECK_THROWS_AS(curve_through_two_sections(q(0), q(0), q(1), q(1)), MathError);
    auto T = instances::generic_triple();
    CHECK(on_curve(T.C, T.P1));
    CHECK(on_curve(T.C, T.P2));
    CHECK(on_curve(T.C, T.Q));
}

TEST_CASE("collision scan: condition (A) instance") {
    auto s = family_standard();
    const auto& C = s.curve;
    PointFF Q = scalar_mul(C, 2, s.P);
    auto rep = collision_scan(C, s.P, *s.Q, Q, 2, 6);
    REQUIRE_FALSE(rep.entries.empty());
    CHECK(rep.verified_count() == rep.entries.size());
    for (long m2 = -6; m2 <= 6; ++m2) {
        if (m2 == 0) continue;
        auto c2 = condition_poly(C, *s.Q, Q, m2);
        // every root of the P2 condition is a collision with m1 = 2
        for (const auto& e : rep.entries) {
            Poly g = gcd(e.factor, c2.poly);
            if (!g.is_constant()) CHECK(std::labs(e.m1) <= 2);
        }
        Poly covered = Poly::constant(Field(), FieldElem(1));
        for (const auto& e : rep.entries) covered = covered * gcd(e.factor, c2.poly);
        CHECK(covered.monic() == c2.poly);
    }
}

TEST_CASE("collision scan: soundness and witnesses on the CM family") {
    CMTriple cm;
    const auto& C = cm.fam.curve;
    auto rep = collision_scan(C, cm.fam.P, cm.P2, cm.Q, 8, 8, {4});
    REQUIRE(rep.entries.size() >= 3);
    CHECK(rep.everywhere.empty());
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        const auto& e = rep.entries[i];
        CAPTURE(to_string(e.factor));
        CHECK(e.verified);
        Poly g = gcd(condition_poly(C, cm.fam.P, cm.Q, e.m1).poly, condition_poly(C, cm.P2, cm.Q, e.m2).poly);
        CHECK(divides(e.factor, g));
        CHECK(all_hold(verify_relation_at(C, Base::algebraic(e.factor), MultipleRelation{cm.fam.P, e.m1, cm.Q})));
        CHECK(all_hold(verify_relation_at(C, Base::algebraic(e.factor), MultipleRelation{cm.P2, e.m2, cm.Q})));
        // [m1 - 1 - theta] kills P1 there, hence so does its norm.
        OrderElem alpha{cm.e.order, e.m1 - 1, -1};
        CHECK(all_hold(verify_relation_at(C, Base::algebraic(e.factor), KillRelation{cm.e, alpha, cm.fam.P})));
        CHECK(all_hold(verify_relation_at(C, Base::algebraic(e.factor),
                                          MultipleRelation{cm.fam.P, norm(alpha), PointFF::infinity()},
                                          VerifyMethod::FiberArithmetic)));
        for (std::size_t j = 0; j < i; ++j) {
            CHECK(gcd(e.factor, rep.entries[j].factor).is_one());
            CHECK(compare(rep.entries[j].factor, e.factor) < 0);
        }
    }
    // no smaller witness exists
    std::map<long, Poly> c1, c2;
    for (long m = -8; m <= 8; ++m) {
        if (m == 0) continue;
        c1[m] = condition_poly(C, cm.fam.P, cm.Q, m).poly;
        c2[m] = condition_poly(C, cm.P2, cm.Q, m).poly;
    }
    for (const auto& e : rep.entries)
        for (const auto& [m1, p1] : c1)
            for (const auto& [m2, p2] : c2) {
                if (std::make_tuple(std::labs(m1), std::labs(m2), m1 < 0, m2 < 0) >=
                    std::make_tuple(std::labs(e.m1), std::labs(e.m2), e.m1 < 0, e.m2 < 0))
                    continue;
                CHECK_FALSE(divides(e.factor, gcd(p1, p2)));
            }
}

TEST_CASE("collision scan: deterministic across worker counts") {
    CMTriple cm;
    auto a = collision_scan(cm.fam.curve, cm.fam.P, cm.P2, cm.Q, 6, 6, {1});
    auto b = collision_scan(cm.fam.curve, cm.fam.P, cm.P2, cm.Q, 6, 6, {8});
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].factor == b.entries[i].factor);
        CHECK(a.entries[i].m1 == b.entries[i].m1);
        CHECK(a.entries[i].m2 == b.entries[i].m2);
    }
}

TEST_CASE("collision scan: rational collisions are all reported") {
    CMTriple cm;
    auto s = family_standard();
    std::vector<std::tuple<CurveFF, PointFF, PointFF, PointFF>> cases = {
        {cm.fam.curve, cm.fam.P, cm.P2, cm.Q},
        {s.curve, s.P, *s.Q, scalar_mul(s.curve, 2, s.P)},
    };
    for (const auto& [C, P1, P2, Q] : cases) {
        auto rep = collision_scan(C, P1, P2, Q, 6, 6);
        for (const auto& l0 : brute::small_rationals(10)) {
            auto f = brute::good_fiber(C, {P1, P2, Q}, l0);
            if (!f) continue;
            auto m1s = brute::multipliers(f->curve, f->points[0], f->points[2], 6);
            auto m2s = brute::multipliers(f->curve, f->points[1], f->points[2], 6);
            if (m1s.empty() || m2s.empty()) continue;
            CAPTURE(l0);
            Poly x = lin(l0, C.field());
            CHECK(std::any_of(rep.entries.begin(), rep.entries.end(),
                              [&](const CollisionEntry& e) { return divides(x, e.factor); }));
        }
    }
}

TEST_CASE("collision scan: generic unrelated triple") {
    auto T = instances::generic_triple();
    auto rep = collision_scan(T.C, T.P1, T.P2, T.Q, 8, 8, {4});
    CHECK(rep.entries.empty());
    CHECK_THROWS_AS(collision_scan(T.C, T.P1, T.P2, T.Q, 0, 3), MathError);
}

TEST_CASE("degree growth") {
    auto s = family_standard();
    const auto& C = s.curve;
    auto rows = degree_growth(C, s.P, *s.Q, 10, 4);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].degree == condition_poly(C, s.P, *s.Q, 1).poly.degree());
    for (long n = 4; n <= 5; ++n) {
        double r = double(rows[2 * n - 1].degree) / double(rows[n - 1].degree);
        CHECK(r >= 3.2);
        CHECK(r <= 4.8);
    }
    // Q = O: torsion loci, read off the division polynomials at P.
    auto tors = degree_growth(C, s.P, PointFF::infinity(), 8);
    auto f = division_polys(C, 8);
    Poly excl = bad_fiber_locus(C);
    for (long n = 2; n <= 8; ++n) {
        CAPTURE(n);
        Poly z = squarefree_part(f[n].eval(s.P.x()).num());
        z = exact_quotient(z, gcd(z, excl));
        CHECK(tors[n - 1].degree == z.degree());
    }
    CHECK(degree_growth(C, s.P, scalar_mul(C, 3, s.P), 4)[2].degree == -1);
}

TEST_CASE("classify") {
    auto s = family_standard();
    const auto& C = s.curve;
    CHECK(to_string(classify(C, s.P, *s.Q, scalar_mul(C, 2, s.P))) == "A: k=2 i=1");
    auto v = classify(C, s.P, *s.Q, scalar_mul(C, 5, s.P));
    CHECK(v.kind == Verdict::Kind::A);
    CHECK(v.k == 5);
    CHECK(v.i == 1);
    v = classify(C, s.P, scalar_mul(C, 3, s.P), *s.Q);
    CHECK(v.kind == Verdict::Kind::B);
    CHECK(v.k1 == 3);
    CHECK(v.k2 == 1);

    CMTriple cm;
    v = classify(cm.fam.curve, cm.fam.P, cm.P2, cm.Q);
    REQUIRE(v.kind == Verdict::Kind::C);
    const auto& t = *v.triple;
    CHECK(t.alpha1.a * t.alpha2.b != t.alpha2.a * t.alpha1.b);
    PointFF lhs = cm_apply(cm.fam.curve, cm.e, t.alpha1, cm.fam.P);
    CHECK(lhs == cm_apply(cm.fam.curve, cm.e, t.alpha2, cm.P2));
    CHECK(lhs == cm_apply(cm.fam.curve, cm.e, t.beta, cm.Q));

    auto T = instances::generic_triple();
    v = classify(T.C, T.P1, T.P2, T.Q);
    CHECK(v.kind == Verdict::Kind::NoneFound);
    CHECK(to_string(v) == "NoneFound: K=12 box=2 torsion=12");

    CurveFF C0 = CurveFF::make(RatFunc(Field()), q(1));
    v = classify(C0, PointFF(q(0), q(1)), PointFF(q(2), q(3)), PointFF(q(-1), q(0)));
    CHECK(v.kind == Verdict::Kind::Degenerate);
    CHECK(to_string(v) == "Degenerate: P1 is torsion of order 3");
    v = classify(C, s.P, *s.Q, PointFF::infinity());
    CHECK(v.kind == Verdict::Kind::Degenerate);
}
