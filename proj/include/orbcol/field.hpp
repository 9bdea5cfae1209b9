#pragma once

#include "orbcol/numbers.hpp"

#include <optional>
#include <vector>

namespace orbcol {

/// Element c0 + c1*t of a coefficient field Q or Q[t]/(m). Carries no context;
/// multiplication and inversion go through the owning Field.
struct FieldElem {
    Rational c0;
    Rational c1;

    FieldElem() = default;
    FieldElem(Rational a) : c0(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    FieldElem(Rational a, Rational b) : c0(std::move(a)), c1(std::move(b)) {}
    FieldElem(long a) : c0(a) {}  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return sgn(c0) == 0 && sgn(c1) == 0; }
    bool is_one() const { return c0 == 1 && sgn(c1) == 0; }
    bool is_rational() const { return sgn(c1) == 0; }

    friend bool operator==(const FieldElem& x, const FieldElem& y) { return x.c0 == y.c0 && x.c1 == y.c1; }
    friend FieldElem operator+(const FieldElem& x, const FieldElem& y) { return {x.c0 + y.c0, x.c1 + y.c1}; }
    friend FieldElem operator-(const FieldElem& x, const FieldElem& y) { return {x.c0 - y.c0, x.c1 - y.c1}; }
    friend FieldElem operator-(const FieldElem& x) { return {-x.c0, -x.c1}; }
    friend FieldElem operator*(const Rational& s, const FieldElem& x) { return {s * x.c0, s * x.c1}; }
};

/// The coefficient field: Q, or Q[t]/(t^2 + p t + q) with integer p, q and
/// negative discriminant (an imaginary quadratic field).
class Field {
public:
    /// The rationals.
    Field() = default;

    static Field rationals() { return Field(); }

    /// Q[t]/(t^2 + p t + q). Throws MathError unless p^2 - 4q < 0.
    static Field quadratic(Integer p, Integer q);

    /// From a monic minimal polynomial given low-to-high. Degree 1 yields Q
    /// (the generator then names the rational root); degree 2 must have
    /// integer coefficients and negative discriminant.
    static Field from_minpoly(const std::vector<Rational>& coeffs);

    int degree() const { return degree_; }
    bool is_rational() const { return degree_ == 1; }
    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    Integer discriminant() const { return p_ * p_ - 4 * q_; }

    /// Minimal polynomial coefficients low-to-high.
    std::vector<Rational> minpoly() const;

    /// The generator t as an element; for Q this is the stored rational root.
    FieldElem generator() const;

    FieldElem mul(const FieldElem& x, const FieldElem& y) const;
    FieldElem sqr(const FieldElem& x) const { return mul(x, x); }
    /// Throws MathError on zero.
    FieldElem inv(const FieldElem& x) const;
    FieldElem div(const FieldElem& x, const FieldElem& y) const { return mul(x, inv(y)); }
    FieldElem pow(FieldElem x, unsigned long e) const;
    FieldElem conj(const FieldElem& x) const;
    Rational norm(const FieldElem& x) const;

    /// Some s in the field with s^2 = c, if one exists.
    std::optional<FieldElem> sqrt_of_rational(const Rational& c) const;

    /// Canonical reduction (clears c1 for Q).
    FieldElem reduce(FieldElem x) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.degree_ == b.degree_ && a.p_ == b.p_ && a.q_ == b.q_ && a.root_ == b.root_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    int degree_ = 1;
    Integer p_ = 0;
    Integer q_ = 0;
    Rational root_ = 0;  // degree 1 only
};

std::string to_string(const FieldElem& x, const char* generator = "g");

/// Exact rational square root, if x is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x);

}  // namespace orbcol
