#pragma once

#include "orbcol/poly.hpp"

#include <variant>

namespace orbcol {

/// Raised when an element vanishes modulo the whole modulus, so no branch
/// of a dynamic-evaluation split can invert it.
class ZeroInEveryBranch : public MathError {
public:
    ZeroInEveryBranch() : MathError("element is zero modulo every factor of the modulus") {}
};

/// Residue class in K[lambda]/(h) for a monic squarefree h of degree >= 1.
/// The ring need not be a field; inversion may split h.
class QuotElem {
public:
    QuotElem() = default;
    /// Throws MathError if the modulus is constant. h is made monic; it is
    /// the caller's job to pass a squarefree modulus.
    QuotElem(const Poly& modulus, const Poly& residue);

    static QuotElem constant(const Poly& modulus, const FieldElem& c);

    const Poly& modulus() const { return modulus_; }
    const Poly& residue() const { return residue_; }
    const Field& field() const { return modulus_.field(); }
    bool is_zero() const { return residue_.is_zero(); }

    QuotElem operator-() const { return {modulus_, -residue_, true}; }
    friend QuotElem operator+(const QuotElem& a, const QuotElem& b);
    friend QuotElem operator-(const QuotElem& a, const QuotElem& b);
    friend QuotElem operator*(const QuotElem& a, const QuotElem& b);
    friend bool operator==(const QuotElem& a, const QuotElem& b) {
        return a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
    }
    friend bool operator!=(const QuotElem& a, const QuotElem& b) { return !(a == b); }

    QuotElem pow(unsigned long e) const;
    /// Same residue class read modulo a factor of the modulus.
    QuotElem restrict_to(const Poly& factor) const;

private:
    QuotElem(Poly modulus, Poly residue, bool /*reduced*/) : modulus_(std::move(modulus)), residue_(std::move(residue)) {}
    void check_same_modulus(const QuotElem& other) const;

    Poly modulus_;
    Poly residue_;
};

struct Inverse {
    QuotElem value;
};

/// Coprime factorization modulus = first * second (both monic, nonconstant);
/// the element is zero modulo `first` and invertible modulo `second`.
struct Split {
    Poly first;
    Poly second;
};

/// Inverse, or the splitting forced by a zero divisor. Throws
/// ZeroInEveryBranch when x is zero.
std::variant<Inverse, Split> quot_invert(const QuotElem& x);

std::string to_string(const QuotElem& x, const char* var = "l", const char* generator = "g");

}  // namespace orbcol
