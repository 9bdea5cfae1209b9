#include "orbcol/quotient.hpp"

namespace orbcol {

QuotElem::QuotElem(const Poly& modulus, const Poly& residue) {
    if (modulus.is_constant()) throw MathError("quotient ring modulus must have positive degree");
    if (modulus.field() != residue.field()) throw MathError("modulus and residue over different fields");
    modulus_ = modulus.monic();
    residue_ = residue.degree() < modulus_.degree() ? residue : rem(residue, modulus_);
}

QuotElem QuotElem::constant(const Poly& modulus, const FieldElem& c) {
    return QuotElem(modulus, Poly::constant(modulus.field(), c));
}

void QuotElem::check_same_modulus(const QuotElem& other) const {
    if (modulus_ != other.modulus_) throw MathError("quotient ring elements with different moduli");
}

QuotElem operator+(const QuotElem& a, const QuotElem& b) {
    a.check_same_modulus(b);
    return {a.modulus_, a.residue_ + b.residue_, true};
}

QuotElem operator-(const QuotElem& a, const QuotElem& b) {
    a.check_same_modulus(b);
    return {a.modulus_, a.residue_ - b.residue_, true};
}

QuotElem operator*(const QuotElem& a, const QuotElem& b) {
    a.check_same_modulus(b);
    return QuotElem(a.modulus_, a.residue_ * b.residue_);
}

QuotElem QuotElem::pow(unsigned long e) const {
    QuotElem r = constant(modulus_, FieldElem(1)), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

QuotElem QuotElem::restrict_to(const Poly& factor) const { return QuotElem(factor, residue_); }

std::variant<Inverse, Split> quot_invert(const QuotElem& x) {
    if (x.is_zero()) throw ZeroInEveryBranch();
    const Poly& h = x.modulus();
    const Field& F = h.field();
    Poly g = gcd(x.residue(), h);
    if (!g.is_constant()) {
        if (g.degree() == h.degree()) throw ZeroInEveryBranch();
        return Split{g, exact_quotient(h, g).monic()};
    }
    // Extended Euclid tracking only the cofactor of the residue.
    Poly r0 = h, r1 = x.residue();
    Poly s0(F), s1 = Poly::constant(F, FieldElem(1));
    while (!r1.is_constant()) {
        DivRem qr = divrem(r0, r1);
        Poly s2 = s0 - qr.quotient * s1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Poly inv = s1.scaled(F.inv(r1.coeff(0)));
    QuotElem out(h, inv);
    if (!(out * x).residue().is_one()) throw InternalError("quotient inverse failed verification");
    return Inverse{out};
}

std::string to_string(const QuotElem& x, const char* var, const char* generator) {
    return to_string(x.residue(), var, generator) + " mod (" + to_string(x.modulus(), var, generator) + ")";
}

}  // namespace orbcol
