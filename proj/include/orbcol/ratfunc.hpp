#pragma once

#include "orbcol/poly.hpp"

namespace orbcol {

/// Rational function num/den in lambda. Canonical: den monic, gcd(num, den) = 1,
/// so equality is structural.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(Field(), FieldElem(1))) {}
    explicit RatFunc(const Field& field) : num_(field), den_(Poly::constant(field, FieldElem(1))) {}
    /// Polynomial embedding.
    RatFunc(Poly p);  // NOLINT(google-explicit-constructor)
    /// Throws MathError if den is zero.
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const Field& field, const FieldElem& c) { return RatFunc(Poly::constant(field, c)); }
    static RatFunc variable(const Field& field) { return RatFunc(Poly::variable(field)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Field& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Constant element of the coefficient field.
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    FieldElem constant_value() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    /// Throws MathError on division by zero.
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

    RatFunc scaled(const FieldElem& c) const;
    RatFunc pow(long e) const;
    RatFunc inverse() const;
    /// Value at a point where the denominator does not vanish.
    FieldElem eval(const FieldElem& x) const;

private:
    RatFunc(Poly num, Poly den, bool /*already canonical*/) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

std::string to_string(const RatFunc& f, const char* var = "l", const char* generator = "g");

}  // namespace orbcol
