#pragma once

// Fibers of the surface at lambda = lambda0 (rational) or at the roots of a
// squarefree h(lambda). Both are handled as residue arithmetic modulo a
// branch modulus; a rational lambda0 is the modulus lambda - lambda0.

#include "orbcol/elliptic.hpp"
#include "orbcol/quotient.hpp"

#include <variant>

namespace orbcol {

/// The fiber is singular, or a coefficient or section has a pole there.
class BadFiber : public MathError {
public:
    BadFiber(const std::string& what, Poly factor) : MathError(what), factor_(std::move(factor)) {}
    /// The offending monic factor of the base modulus.
    const Poly& factor() const { return factor_; }

private:
    Poly factor_;
};

class Base {
public:
    static Base rational(const Field& field, const Rational& lambda0);
    /// Throws MathError unless h is nonconstant; h is made monic. The caller
    /// vouches that h is squarefree.
    static Base algebraic(const Poly& h);

    bool is_rational() const { return rational_; }
    /// lambda - lambda0 for a rational base.
    const Poly& modulus() const { return modulus_; }
    /// Throws MathError for an algebraic base.
    Rational value() const;

private:
    bool rational_ = false;
    Poly modulus_;
};

/// A specialized point on one branch. For a rational base the residues are
/// constants.
struct FiberPoint {
    Poly modulus;
    QuotElem A;
    QuotElem B;
    bool infinity = true;
    QuotElem x;
    QuotElem y;

    /// Coordinates as field elements; requires a linear modulus and an affine point.
    FieldElem x_value() const;
    FieldElem y_value() const;
    bool on_curve() const;
    FiberPoint restrict_to(const Poly& factor) const;
};

/// Monic factors where the fiber of C is bad: zeros of the discriminant and
/// poles of A and B.
Poly bad_fiber_locus(const CurveFF& C);
/// Poles of the coordinates of P.
Poly pole_locus(const PointFF& P);

/// Specialization of P. Throws BadFiber if any part of the base is bad for C
/// or a pole of P.
FiberPoint specialize(const CurveFF& C, const PointFF& P, const Base& base);

/// Chord-tangent sum on a fiber; a zero divisor splits the modulus, so the
/// result is one point per branch (moduli multiply to the input modulus).
std::vector<FiberPoint> fiber_add(const FiberPoint& P, const FiberPoint& R);
std::vector<FiberPoint> fiber_scalar_mul(long n, const FiberPoint& P);
FiberPoint fiber_negate(const FiberPoint& P);
/// Per-branch equality.
struct BranchVerdict {
    Poly modulus;
    bool holds = false;
};
std::vector<BranchVerdict> fiber_equal(const FiberPoint& P, const FiberPoint& R);

/// "[m]P = Q".
struct MultipleRelation {
    PointFF P;
    long m = 1;
    PointFF Q;
};

/// "[alpha]Q = O" with alpha in the CM order of C.
struct KillRelation {
    CMEndo endo;
    OrderElem alpha;
    PointFF Q;
};

using Relation = std::variant<MultipleRelation, KillRelation>;

enum class VerifyMethod {
    Auto,                   // fiber arithmetic for rational bases, generic otherwise
    FiberArithmetic,        // double-and-add on the specialized points
    GenericSpecialization,  // evaluate the generic [m]P modulo the branch
};

/// Exact truth value of the specialized relation on each branch. Verdicts
/// are sorted by branch modulus. Throws BadFiber.
std::vector<BranchVerdict> verify_relation_at(const CurveFF& C, const Base& base, const Relation& rel,
                                              VerifyMethod method = VerifyMethod::Auto);

/// Same as the generic method, with the generic left-hand side supplied.
/// `lhs` is [m]P (or [alpha]Q) and `rhs` the target (O for kill relations).
std::vector<BranchVerdict> compare_specialized(const Poly& h, const PointFF& lhs, const PointFF& rhs);

struct TorsionAt {
    Poly modulus;
    enum class Kind { Order, ExceedsBound } kind = Kind::ExceedsBound;
    long n = 0;  // the order, or the bound used
    /// ExceedsBound with the uniform bound over Q: the point has infinite order.
    bool proven_non_torsion = false;
};

/// Least n <= Nmax with [n]P = O, per branch. When the branch is a rational
/// point over Q (curve and point defined over Q), a point of finite order
/// has order at most 12 (Mazur), so the search stops at 12 and
/// ExceedsBound proves infinite order.
std::vector<TorsionAt> torsion_order_at(const FiberPoint& P, long Nmax);

/// True if the fiber and point are defined over Q.
bool fiber_over_Q(const FiberPoint& P);

}  // namespace orbcol
