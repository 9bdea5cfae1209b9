#pragma once

// Short Weierstrass curves y^2 = x^3 + A x + B over K(lambda) and their
// points (sections).

#include "orbcol/quad_order.hpp"
#include "orbcol/ratfunc.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace orbcol {

class CurveFF {
public:
    /// Throws MathError if A, B live over different fields or the
    /// discriminant is identically zero.
    static CurveFF make(RatFunc A, RatFunc B);

    const RatFunc& A() const { return A_; }
    const RatFunc& B() const { return B_; }
    const Field& field() const { return A_.field(); }

    /// -16 (4 A^3 + 27 B^2).
    const RatFunc& discriminant() const { return disc_; }
    /// 1728 * 4 A^3 / (4 A^3 + 27 B^2).
    RatFunc j_invariant() const;

    friend bool operator==(const CurveFF& a, const CurveFF& b) { return a.A_ == b.A_ && a.B_ == b.B_; }

private:
    CurveFF(RatFunc A, RatFunc B, RatFunc disc) : A_(std::move(A)), B_(std::move(B)), disc_(std::move(disc)) {}

    RatFunc A_;
    RatFunc B_;
    RatFunc disc_;
};

class PointFF {
public:
    /// The point at infinity.
    PointFF() = default;
    PointFF(RatFunc x, RatFunc y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    static PointFF infinity() { return PointFF(); }

    bool is_infinity() const { return inf_; }
    const RatFunc& x() const { return x_; }
    const RatFunc& y() const { return y_; }

    friend bool operator==(const PointFF& a, const PointFF& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const PointFF& a, const PointFF& b) { return !(a == b); }

private:
    bool inf_ = true;
    RatFunc x_;
    RatFunc y_;
};

bool on_curve(const CurveFF& C, const PointFF& P);
/// Throws MathError naming `what` if P is not on C.
void require_on_curve(const CurveFF& C, const PointFF& P, const char* what = "point");

PointFF negate(const PointFF& P);
/// Chord-tangent sum. Checks both inputs lie on C.
PointFF add(const CurveFF& C, const PointFF& P, const PointFF& R);
/// Same without the membership checks.
PointFF add_unchecked(const CurveFF& C, const PointFF& P, const PointFF& R);
/// Double-and-add; [0]P = infinity, [-n]P = -[n]P.
PointFF scalar_mul(const CurveFF& C, long n, const PointFF& P);

/// [1]P, [2]P, ... computed by repeated addition and kept.
class Multiples {
public:
    Multiples(CurveFF C, PointFF P) : C_(std::move(C)), list_{PointFF::infinity(), std::move(P)} {}
    /// [k]P for k >= 0.
    const PointFF& at(long k);
    /// [k]P for any sign.
    PointFF signed_at(long k) { return k < 0 ? negate(at(-k)) : at(k); }

private:
    CurveFF C_;
    std::vector<PointFF> list_;
};

/// Polynomial in x with coefficients in K(lambda), low-to-high.
struct XPoly {
    std::vector<RatFunc> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    RatFunc eval(const RatFunc& x) const;
};

/// y-stripped division polynomial f_n: psi_n = f_n for odd n and
/// psi_n = 2y f_n for even n (so f_2 = 1). Exact; memoized per call.
XPoly division_poly(const CurveFF& C, long n);
/// All of f_0 .. f_nmax.
std::vector<XPoly> division_polys(const CurveFF& C, long nmax);

/// psi_n(P) = 0, i.e. [n]P = O, for an affine point P (n >= 1).
bool psi_vanishes(const CurveFF& C, const std::vector<XPoly>& f, long n, const PointFF& P);

/// Automorphism (x, y) -> (u^2 x, u^3 y) realizing theta in `order`.
struct CMEndo {
    FieldElem u;
    /// i (u^2 = -1) or omega (omega^2 + omega + 1 = 0).
    FieldElem generator;
    OrderSpec order;
};

/// CM structure of the two classical shapes (B = 0 with i in the field, or
/// A = 0 with a primitive cube root of unity in the field).
std::optional<CMEndo> detect_cm(const CurveFF& C);
/// u^4 A = A and u^6 B = B.
bool admits(const CurveFF& C, const CMEndo& e);

PointFF apply_theta(const CurveFF& C, const CMEndo& e, const PointFF& P);
/// [c + d theta]P. Throws MathError if C does not admit e.
PointFF cm_apply(const CurveFF& C, const CMEndo& e, const OrderElem& alpha, const PointFF& P);

/// Least |k| <= K, k != 0, with [k]P = Q (k > 0 preferred on ties).
std::optional<long> find_relation_A(const CurveFF& C, const PointFF& P, const PointFF& Q, long K);
/// Lexicographically least (k1, k2), 0 < k1 <= K, 0 < |k2| <= K, with
/// [k1]P1 = [k2]P2.
std::optional<std::pair<long, long>> find_relation_B(const CurveFF& C, const PointFF& P1, const PointFF& P2, long K);

struct CTriple {
    OrderElem alpha1;
    OrderElem alpha2;
    OrderElem beta;
};

/// Order in which find_relation_C visits candidate coefficients: by
/// max(|a|, |b|), then a, then b; zero excluded.
std::vector<OrderElem> box_elements(const OrderSpec& spec, long box);

/// First triple (in box order on alpha1, then alpha2, then beta) of nonzero
/// elements with coordinates in [-box, box], alpha1/alpha2 not rational, and
/// [alpha1]P1 = [alpha2]P2 = [beta]Q. Throws MathError if C does not admit e.
std::optional<CTriple> find_relation_C(const CurveFF& C, const PointFF& P1, const PointFF& P2, const PointFF& Q,
                                       const CMEndo& e, long box);

bool is_isotrivial(const CurveFF& C);
bool is_constant_section(const PointFF& P);

struct TorsionVerdict {
    enum class Kind { TorsionOfOrder, NonTorsion, UnknownBeyond };
    Kind kind = Kind::UnknownBeyond;
    long n = 0;  // order, or the bound searched
};

/// Specialization first: a good rational fiber over Q where P has no
/// multiple of order <= 12 proves P non-torsion. Otherwise [n]P = O is
/// checked generically for n <= Nmax.
TorsionVerdict is_torsion_section(const CurveFF& C, const PointFF& P, long Nmax);

std::string to_string(const PointFF& P, const char* var = "l", const char* generator = "g");

}  // namespace orbcol
