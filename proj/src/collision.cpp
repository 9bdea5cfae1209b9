#include "orbcol/collision.hpp"

#include "orbcol/detail/parallel.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace orbcol {

namespace {

Poly one_over(const Field& F) { return Poly::constant(F, FieldElem(1)); }

// Monic squarefree product of the loci where the relation is not examined.
Poly excluded_locus(const CurveFF& C, const PointFF& P, const PointFF& Q) {
    Poly e = bad_fiber_locus(C);
    for (const PointFF* S : {&P, &Q})
        if (!S->is_infinity()) e = e * pole_locus(*S);
    return squarefree_part(e);
}

// Removes from squarefree d every factor shared with the locus; returns the
// removed pieces.
std::vector<Poly> strip(Poly& d, const Poly& locus) {
    std::vector<Poly> removed;
    Poly g = gcd(d, locus);
    if (!g.is_constant()) {
        d = exact_quotient(d, g).monic();
        removed.push_back(g);
    }
    return removed;
}

// Coprime refinement: after the call, `basis` is pairwise coprime and
// generates the same squarefree divisors as before plus g.
void refine(std::vector<Poly>& basis, Poly g) {
    std::vector<Poly> next;
    for (auto& b : basis) {
        if (g.is_constant()) {
            next.push_back(std::move(b));
            continue;
        }
        Poly d = gcd(b, g);
        if (d.is_constant()) {
            next.push_back(std::move(b));
            continue;
        }
        Poly rest = exact_quotient(b, d).monic();
        g = exact_quotient(g, d).monic();
        next.push_back(d);
        if (!rest.is_constant()) next.push_back(std::move(rest));
    }
    if (!g.is_constant()) next.push_back(g.monic());
    basis = std::move(next);
}

std::vector<Poly> split_rational(const Poly& f) {
    if (!f.is_rational() || f.degree() <= 1) return {f};
    std::vector<Poly> out;
    Poly rest = f;
    for (const auto& r : rational_roots(f)) {
        Poly lin = Poly::from_coeffs(f.field(), {FieldElem(-r), FieldElem(1)});
        rest = exact_quotient(rest, lin).monic();
        out.push_back(lin);
    }
    if (!rest.is_constant()) out.push_back(rest);
    return out;
}

// Witness order: |m1|, |m2|, then positive before negative.
auto witness_key(long m1, long m2) { return std::make_tuple(std::labs(m1), std::labs(m2), m1 < 0, m2 < 0); }

ConditionPoly condition_from(const CurveFF& C, const PointFF& mP, const PointFF& Q, long m, const Poly& locus) {
    ConditionPoly cp;
    cp.m = m;
    PointFF R = add_unchecked(C, mP, negate(Q));
    if (R.is_infinity()) {
        cp.identically_satisfied = true;
        cp.poly = one_over(C.field());
        return cp;
    }
    Poly d = R.x().den().is_constant() ? one_over(C.field()) : squarefree_part(R.x().den());
    cp.excluded = strip(d, locus);
    cp.poly = d.monic();
    return cp;
}

std::vector<long> signed_range(long M) {
    std::vector<long> out;
    for (long m = 1; m <= M; ++m) {
        out.push_back(m);
        out.push_back(-m);
    }
    return out;
}

// [m]P for 1 <= m <= M, two points in parallel when jobs allow.
std::vector<std::vector<PointFF>> multiples_of(const CurveFF& C, const std::vector<const PointFF*>& pts, long M,
                                               unsigned jobs) {
    std::vector<std::vector<PointFF>> out(pts.size());
    detail::parallel_for(pts.size(), jobs, [&](std::size_t i) {
        Multiples mult(C, *pts[i]);
        out[i].push_back(PointFF::infinity());
        for (long m = 1; m <= M; ++m) out[i].push_back(mult.at(m));
    });
    return out;
}

PointFF signed_multiple(const std::vector<PointFF>& table, long m) {
    return m < 0 ? negate(table[static_cast<std::size_t>(-m)]) : table[static_cast<std::size_t>(m)];
}

}  // namespace

ConditionPoly condition_poly(const CurveFF& C, const PointFF& P, const PointFF& Q, long m, const PointFF* mP) {
    if (m == 0) throw MathError("condition polynomial needs m != 0");
    require_on_curve(C, P, "P");
    require_on_curve(C, Q, "Q");
    PointFF M = mP ? *mP : scalar_mul(C, m, P);
    return condition_from(C, M, Q, m, excluded_locus(C, P, Q));
}

std::optional<Poly> condition_poly_by_numerators(const CurveFF& C, const PointFF& P, const PointFF& Q, long m) {
    if (m == 0) throw MathError("condition polynomial needs m != 0");
    require_on_curve(C, P, "P");
    require_on_curve(C, Q, "Q");
    PointFF M = scalar_mul(C, m, P);
    if (M == Q) return std::nullopt;
    Poly locus = excluded_locus(C, P, Q);
    Poly d(C.field());
    if (Q.is_infinity()) {
        d = M.x().den();
    } else if (M.is_infinity()) {
        return one_over(C.field());
    } else {
        d = gcd((M.x() - Q.x()).num(), (M.y() - Q.y()).num());
    }
    if (d.is_constant()) return one_over(C.field());
    d = squarefree_part(d);
    strip(d, locus);
    return d.monic();
}

CurveFF curve_through_two_sections(const RatFunc& x1, const RatFunc& y1, const RatFunc& x2, const RatFunc& y2) {
    if (x1 == x2) throw MathError("the two sections share their x-coordinate");
    // y_i^2 - x_i^3 = A x_i + B
    RatFunc r1 = y1 * y1 - x1 * x1 * x1, r2 = y2 * y2 - x2 * x2 * x2;
    RatFunc A = (r1 - r2) / (x1 - x2);
    RatFunc B = r1 - A * x1;
    return CurveFF::make(A, B);
}

std::size_t CollisionReport::verified_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.verified; }));
}

CollisionReport collision_scan(const CurveFF& C, const PointFF& P1, const PointFF& P2, const PointFF& Q, long M1,
                               long M2, const ScanOptions& opts) {
    if (M1 < 1 || M2 < 1) throw MathError("scan bounds must be at least 1");
    require_on_curve(C, P1, "P1");
    require_on_curve(C, P2, "P2");
    require_on_curve(C, Q, "Q");
    const unsigned jobs = std::max(1u, opts.jobs);

    auto tables = multiples_of(C, {&P1, &P2}, std::max(M1, M2), jobs);
    Poly locus1 = excluded_locus(C, P1, Q), locus2 = excluded_locus(C, P2, Q);

    auto r1 = signed_range(M1), r2 = signed_range(M2);
    std::vector<ConditionPoly> c1(r1.size()), c2(r2.size());
    detail::parallel_for(r1.size() + r2.size(), jobs, [&](std::size_t i) {
        if (i < r1.size())
            c1[i] = condition_from(C, signed_multiple(tables[0], r1[i]), Q, r1[i], locus1);
        else {
            std::size_t j = i - r1.size();
            c2[j] = condition_from(C, signed_multiple(tables[1], r2[j]), Q, r2[j], locus2);
        }
    });

    CollisionReport rep;
    rep.M1 = M1;
    rep.M2 = M2;

    // Pairwise gcds; a sentinel absorbs (the gcd is the other polynomial).
    const std::size_t npairs = r1.size() * r2.size();
    std::vector<std::optional<Poly>> g(npairs);
    std::vector<char> everywhere(npairs, 0);
    detail::parallel_for(npairs, jobs, [&](std::size_t k) {
        const auto& a = c1[k / r2.size()];
        const auto& b = c2[k % r2.size()];
        if (a.identically_satisfied && b.identically_satisfied) {
            everywhere[k] = 1;
            return;
        }
        Poly d = a.identically_satisfied ? b.poly : b.identically_satisfied ? a.poly : gcd(a.poly, b.poly);
        if (!d.is_constant()) g[k] = d.monic();
    });
    for (std::size_t k = 0; k < npairs; ++k)
        if (everywhere[k]) rep.everywhere.emplace_back(r1[k / r2.size()], r2[k % r2.size()]);

    // Coprime basis over all contributions, in a fixed order.
    std::vector<Poly> basis;
    for (const auto& d : g)
        if (d) refine(basis, *d);
    std::vector<Poly> pieces;
    for (const auto& b : basis)
        for (auto& s : opts.split_rational_roots ? split_rational(b) : std::vector<Poly>{b}) pieces.push_back(s);
    std::sort(pieces.begin(), pieces.end(), [](const Poly& a, const Poly& b) { return compare(a, b) < 0; });

    rep.entries.resize(pieces.size());
    detail::parallel_for(pieces.size(), jobs, [&](std::size_t e) {
        auto& entry = rep.entries[e];
        entry.factor = pieces[e];
        bool found = false;
        for (std::size_t k = 0; k < npairs; ++k) {
            if (!g[k]) continue;
            long m1 = r1[k / r2.size()], m2 = r2[k % r2.size()];
            if (found && witness_key(m1, m2) >= witness_key(entry.m1, entry.m2)) continue;
            if (!divides(entry.factor, *g[k])) continue;
            entry.m1 = m1;
            entry.m2 = m2;
            found = true;
        }
        if (!found) throw InternalError("collision piece without a witness");
        entry.branches1 = compare_specialized(entry.factor, signed_multiple(tables[0], entry.m1), Q);
        entry.branches2 = compare_specialized(entry.factor, signed_multiple(tables[1], entry.m2), Q);
        auto all_true = [](const std::vector<BranchVerdict>& v) {
            return !v.empty() && std::all_of(v.begin(), v.end(), [](const BranchVerdict& b) { return b.holds; });
        };
        entry.verified = all_true(entry.branches1) && all_true(entry.branches2);
    });
    return rep;
}

std::vector<GrowthRow> degree_growth(const CurveFF& C, const PointFF& P, const PointFF& Q, long Nmax, unsigned jobs) {
    if (Nmax < 1) throw MathError("growth bound must be at least 1");
    require_on_curve(C, P, "P");
    require_on_curve(C, Q, "Q");
    auto table = multiples_of(C, {&P}, Nmax, 1)[0];
    Poly locus = excluded_locus(C, P, Q);
    std::vector<GrowthRow> rows(static_cast<std::size_t>(Nmax));
    detail::parallel_for(rows.size(), jobs, [&](std::size_t i) {
        long n = static_cast<long>(i) + 1;
        auto cp = condition_from(C, table[static_cast<std::size_t>(n)], Q, n, locus);
        rows[i] = {n, cp.identically_satisfied ? -1 : cp.poly.degree()};
    });
    return rows;
}

Verdict classify(const CurveFF& C, const PointFF& P1, const PointFF& P2, const PointFF& Q,
                 const ClassifyBounds& bounds) {
    Verdict v;
    v.bounds = bounds;
    const std::pair<const char*, const PointFF*> named[] = {{"P1", &P1}, {"P2", &P2}, {"Q", &Q}};
    for (auto [name, S] : named) {
        require_on_curve(C, *S, name);
        auto t = is_torsion_section(C, *S, bounds.torsion);
        if (t.kind == TorsionVerdict::Kind::TorsionOfOrder) {
            v.kind = Verdict::Kind::Degenerate;
            v.reason = std::string(name) + " is torsion of order " + std::to_string(t.n);
            return v;
        }
    }
    if (is_isotrivial(C) && is_constant_section(P1) && is_constant_section(P2) && is_constant_section(Q)) {
        v.kind = Verdict::Kind::Degenerate;
        v.reason = "isotrivial curve with constant sections";
        return v;
    }
    for (int i = 1; i <= 2; ++i) {
        if (auto k = find_relation_A(C, i == 1 ? P1 : P2, Q, bounds.K)) {
            v.kind = Verdict::Kind::A;
            v.k = *k;
            v.i = i;
            return v;
        }
    }
    if (auto kk = find_relation_B(C, P1, P2, bounds.K)) {
        v.kind = Verdict::Kind::B;
        v.k1 = kk->first;
        v.k2 = kk->second;
        return v;
    }
    if (auto e = detect_cm(C)) {
        if (auto t = find_relation_C(C, P1, P2, Q, *e, bounds.box)) {
            v.kind = Verdict::Kind::C;
            v.triple = t;
            return v;
        }
    }
    v.kind = Verdict::Kind::NoneFound;
    return v;
}

std::string to_string(const Verdict& v) {
    switch (v.kind) {
        case Verdict::Kind::A:
            return "A: k=" + std::to_string(v.k) + " i=" + std::to_string(v.i);
        case Verdict::Kind::B:
            return "B: k1=" + std::to_string(v.k1) + " k2=" + std::to_string(v.k2);
        case Verdict::Kind::C:
            return "C: alpha1=" + to_string(v.triple->alpha1) + " alpha2=" + to_string(v.triple->alpha2) +
                   " beta=" + to_string(v.triple->beta);
        case Verdict::Kind::NoneFound:
            return "NoneFound: K=" + std::to_string(v.bounds.K) + " box=" + std::to_string(v.bounds.box) +
                   " torsion=" + std::to_string(v.bounds.torsion);
        case Verdict::Kind::Degenerate:
            return "Degenerate: " + v.reason;
    }
    return {};
}

namespace {

RatFunc lam(const Field& F) { return RatFunc::variable(F); }
RatFunc cst(const Field& F, long c) { return RatFunc::constant(F, FieldElem(c)); }

}  // namespace

Family family_j1728() {
    Field F = Field::quadratic(0, 1);
    RatFunc l = lam(F);
    return {"j1728", CurveFF::make(l * l * l - l * l, RatFunc(F)), PointFF(l, l * l), std::nullopt};
}

Family family_standard() {
    Field F;
    RatFunc l = lam(F), one = cst(F, 1), zero(F);
    CurveFF C = curve_through_two_sections(l, one, zero, one);
    return {"standard", C, PointFF(l, one), PointFF(zero, one)};
}

Family family_j0() {
    Field F = Field::quadratic(1, 1);
    RatFunc l = lam(F), one = cst(F, 1);
    return {"j0", CurveFF::make(RatFunc(F), (l + one) * (l + one) - l * l * l), PointFF(l, l + one), std::nullopt};
}

}  // namespace orbcol
