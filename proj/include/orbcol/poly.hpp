#pragma once

#include "orbcol/detail/zpoly.hpp"
#include "orbcol/field.hpp"

#include <string>
#include <vector>

namespace orbcol {

/// Dense univariate polynomial in the parameter lambda over a coefficient
/// Field, stored as (1/den) * sum (u_i + v_i t) lambda^i with integer vectors
/// u, v (v is empty over Q). The representation is canonical: den > 0, the
/// integer content of (den, u, v) is 1, and the top coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(Field field) : field_(std::move(field)) {}

    static Poly constant(const Field& field, const FieldElem& c);
    static Poly monomial(const Field& field, const FieldElem& c, std::size_t degree);
    /// The parameter lambda.
    static Poly variable(const Field& field);
    static Poly from_coeffs(const Field& field, const std::vector<FieldElem>& coeffs);
    static Poly from_rationals(const std::vector<Rational>& coeffs, const Field& field = Field());
    /// Builds from an integer model; canonicalizes.
    static Poly from_integer_model(const Field& field, detail::ZVec u, detail::ZVec v, Integer den = 1);

    const Field& field() const { return field_; }
    /// -1 stands for the degree of the zero polynomial.
    long degree() const { return static_cast<long>(u_.size()) - 1; }
    bool is_zero() const { return u_.empty(); }
    bool is_constant() const { return u_.size() <= 1; }
    bool is_one() const;
    bool is_monic() const;
    /// True if every coefficient lies in Q.
    bool is_rational() const { return v_.empty() || detail::zvec_max_bits(v_) == 0; }

    FieldElem coeff(std::size_t i) const;
    FieldElem leading() const { return is_zero() ? FieldElem() : coeff(u_.size() - 1); }
    std::vector<FieldElem> coeffs() const;

    const Integer& den() const { return den_; }
    const detail::ZVec& u() const { return u_; }
    const detail::ZVec& v() const { return v_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly scaled(const FieldElem& c) const;
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned long e) const;
    /// Zero stays zero.
    Poly monic() const;
    Poly derivative() const;
    /// Multiplies by lambda^k.
    Poly shifted(std::size_t k) const;
    FieldElem eval(const FieldElem& x) const;
    Rational eval_rational(const Rational& x) const;  // requires rational coefficients
    /// Substitutes lambda -> c * lambda.
    Poly rescale_variable(const FieldElem& c) const;

private:
    void canonicalize();
    void check_same_field(const Poly& other) const;

    Field field_;
    Integer den_ = 1;
    detail::ZVec u_;
    detail::ZVec v_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; b must be nonzero.
DivRem divrem(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
/// a / b when b divides a; throws InternalError otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);
/// True if b divides a (b nonzero).
bool divides(const Poly& b, const Poly& a);

/// Monic gcd; gcd(0, 0) = 0. Multi-modular with exact verification.
Poly gcd(const Poly& f, const Poly& g);
/// Monic gcd by the plain Euclidean algorithm over the field.
Poly gcd_euclid(const Poly& f, const Poly& g);

/// Monic product of the distinct irreducible factors of f. Throws MathError on zero.
Poly squarefree_part(const Poly& f);

/// Rational roots of f (over Q), without multiplicity, sorted ascending.
/// Throws MathError if f is zero or has non-rational coefficients.
std::vector<Rational> rational_roots(const Poly& f);
/// Same contract, by numerator/denominator divisor search only (requires
/// the constant and leading coefficients of the primitive model to be
/// factorable by trial division; throws MathError otherwise).
std::vector<Rational> rational_roots_divisor_search(const Poly& f);

/// Deterministic ordering: degree first, then coefficients from the top.
int compare(const Poly& a, const Poly& b);

/// Human-readable form such as "l^3 - l^2 + (1/2 + g)*l".
std::string to_string(const Poly& p, const char* var = "l", const char* generator = "g");

}  // namespace orbcol
