#pragma once

#include "orbcol/specialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbcol {

/// Squarefree polynomial whose roots are the good-fiber lambda with
/// [m]P_lambda = Q_lambda.
struct ConditionPoly {
    long m = 1;
    /// [m]P = Q on the generic fiber; `poly` is then meaningless.
    bool identically_satisfied = false;
    /// Monic, squarefree; 1 when there are no good-fiber solutions.
    Poly poly;
    /// Factors of the pole divisor of x([m]P - Q) dropped because the
    /// fiber is bad or P, Q have a pole there (monic, nonconstant).
    std::vector<Poly> excluded;
};

/// Optionally pass [m]P when it is already known.
ConditionPoly condition_poly(const CurveFF& C, const PointFF& P, const PointFF& Q, long m,
                             const PointFF* mP = nullptr);

/// Independent construction: the squarefree part of
/// gcd(num(x([m]P) - x(Q)), num(y([m]P) - y(Q))), or of den(x([m]P)) when Q
/// is the identity, minus the same excluded loci. Identically satisfied
/// relations give nullopt.
std::optional<Poly> condition_poly_by_numerators(const CurveFF& C, const PointFF& P, const PointFF& Q, long m);

/// y^2 = x^3 + A x + B through (x1, y1) and (x2, y2). Throws MathError if
/// x1 = x2 or the curve is singular.
CurveFF curve_through_two_sections(const RatFunc& x1, const RatFunc& y1, const RatFunc& x2, const RatFunc& y2);

struct CollisionEntry {
    Poly factor;  // monic, squarefree; coprime to every other entry
    long m1 = 0;
    long m2 = 0;
    bool verified = false;
    /// Branch verdicts of [m1]P1 = Q and [m2]P2 = Q over `factor`.
    std::vector<BranchVerdict> branches1;
    std::vector<BranchVerdict> branches2;
};

struct CollisionReport {
    long M1 = 0;
    long M2 = 0;
    /// Sorted by factor (degree, then coefficients).
    std::vector<CollisionEntry> entries;
    /// (m1, m2) with both relations identically satisfied: every good lambda collides.
    std::vector<std::pair<long, long>> everywhere;

    std::size_t verified_count() const;
};

struct ScanOptions {
    unsigned jobs = 1;
    /// Split off linear factors at the rational roots of rational pieces.
    bool split_rational_roots = true;
};

/// Intersections of the condition polynomials over 0 < |m1| <= M1,
/// 0 < |m2| <= M2, refined to a coprime basis; each piece carries its least
/// witness (by |m1|, |m2|, then positive before negative) and is verified on
/// every branch.
CollisionReport collision_scan(const CurveFF& C, const PointFF& P1, const PointFF& P2, const PointFF& Q, long M1,
                               long M2, const ScanOptions& opts = {});

struct GrowthRow {
    long n = 0;
    long degree = -1;  // -1 when identically satisfied
};

std::vector<GrowthRow> degree_growth(const CurveFF& C, const PointFF& P, const PointFF& Q, long Nmax,
                                     unsigned jobs = 1);

struct ClassifyBounds {
    long K = 12;        // relations (A) and (B)
    long box = 2;       // coordinates of alpha1, alpha2, beta for (C)
    long torsion = 12;  // generic torsion search
};

struct Verdict {
    enum class Kind { A, B, C, NoneFound, Degenerate } kind = Kind::NoneFound;
    long k = 0;   // A: [k]P_i = Q
    int i = 0;    // A
    long k1 = 0;  // B: [k1]P1 = [k2]P2
    long k2 = 0;
    std::optional<CTriple> triple;  // C
    ClassifyBounds bounds;          // NoneFound
    std::string reason;             // Degenerate
};

/// Degenerate for torsion inputs (an UnknownBeyond torsion verdict counts as
/// non-torsion) and for isotrivial curves with three constant sections;
/// otherwise the first of (A), (B), (C) found within the bounds.
Verdict classify(const CurveFF& C, const PointFF& P1, const PointFF& P2, const PointFF& Q,
                 const ClassifyBounds& bounds = {});

std::string to_string(const Verdict& v);

/// Built-in test families.
struct Family {
    std::string name;
    CurveFF curve;
    PointFF P;
    std::optional<PointFF> Q;  // second built-in section, if any
};

/// y^2 = x^3 + (l^3 - l^2) x over Q(i), P = (l, l^2). j = 1728.
Family family_j1728();
/// y^2 = x^3 - l^2 x + 1 over Q, P = (l, 1), Q = (0, 1). Non-isotrivial.
Family family_standard();
/// y^2 = x^3 + (l + 1)^2 - l^3 over Q(omega), P = (l, l + 1). j = 0.
Family family_j0();

}  // namespace orbcol
