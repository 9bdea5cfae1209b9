#pragma once

// The order Z[theta] in Q(sqrt(-D)) with
//   theta = f sqrt(-D)              if D != 3 mod 4,
//   theta = f (1 + sqrt(-D)) / 2    if D == 3 mod 4,
// and its action on finite cyclic modules. Machine integers with overflow
// checks; any overflow raises MathError.

#include "orbcol/numbers.hpp"

#include <cstdint>
#include <string>

namespace orbcol {

using i64 = std::int64_t;

enum class ThetaCase { Case1, Case2 };

struct OrderSpec {
    i64 D = 1;
    i64 f = 1;
    ThetaCase kind = ThetaCase::Case1;

    /// Validates D squarefree positive and f positive.
    static OrderSpec make(i64 D, i64 f);

    /// theta^2 = c1 * theta + c0.
    i64 theta_sq_linear() const;
    i64 theta_sq_constant() const;

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

struct OrderElem {
    OrderSpec spec;
    i64 a = 0;
    i64 b = 0;

    static OrderElem theta(const OrderSpec& s) { return {s, 0, 1}; }

    OrderElem conj() const;
    bool is_zero() const { return a == 0 && b == 0; }

    friend OrderElem operator+(const OrderElem& x, const OrderElem& y);
    friend OrderElem operator-(const OrderElem& x, const OrderElem& y);
    friend OrderElem operator*(const OrderElem& x, const OrderElem& y);
    friend bool operator==(const OrderElem&, const OrderElem&) = default;
};

i64 norm(const OrderElem& x);

/// m - theta = (a + 4 theta)(r + s theta).
struct ShiftWitness {
    i64 a = 0;
    i64 m = 0;
    i64 r = 0;
    i64 s = 0;
};

/// Deterministic witness: s is the least positive integer with
/// a s = -1 (mod 4). Verified by multiplication. Throws MathError on even a.
ShiftWitness solve_shift(const OrderSpec& spec, i64 a);

/// Least l in 1..M such that gcd(N(a + 4 theta), 2M) = 1 for every
/// a = 2l - 1 (mod 2M).
i64 find_residue(const OrderSpec& spec, i64 M);

/// Z/N with theta acting as multiplication by theta_rep.
struct CyclicModule {
    OrderSpec spec;
    i64 N = 1;
    i64 theta_rep = 0;

    /// theta_rep satisfies the minimal relation of theta modulo N.
    bool is_valid() const;
};

/// Z[theta]/(a + 4 theta), which is cyclic of order N(a + 4 theta).
CyclicModule theta_rep(const OrderSpec& spec, i64 a);

/// Image of c + d theta acting on the generator: (c + d theta_rep) mod N.
i64 induced_map(const CyclicModule& mod, const OrderElem& x);

/// Multiplication by induced_map(mod, x) is a bijection of Z/N.
bool induced_map_is_bijective(const CyclicModule& mod, const OrderElem& x);

std::string to_string(const OrderElem& x);

}  // namespace orbcol
