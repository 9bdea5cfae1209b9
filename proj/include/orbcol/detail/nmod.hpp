#pragma once

// Word-size prime field arithmetic (Montgomery form) and dense polynomials
// over it. Internal support for the multi-modular algorithms in poly.cpp.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace orbcol::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime_u64(u64 n);

/// The k-th prime below 2^62, k = 0, 1, 2, ... Thread-safe, grows on demand.
u64 modular_prime(std::size_t k);

/// Montgomery arithmetic modulo an odd prime p < 2^62. Values handed to
/// add/sub/mul are in Montgomery form and reduced to [0, p).
class Montgomery {
public:
    explicit Montgomery(u64 p);

    u64 modulus() const { return p_; }

    u64 to(u64 a) const { return mul(a % p_, r2_); }
    u64 from(u64 a) const { return redc(a); }
    u64 one() const { return one_; }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }
    u64 pow(u64 a, u64 e) const;
    /// Inverse of a nonzero element.
    u64 inv(u64 a) const { return pow(a, p_ - 2); }

    /// Square root of a Montgomery-form square, if any.
    std::optional<u64> sqrt(u64 a) const;

private:
    u64 redc(u128 t) const {
        u64 m = static_cast<u64>(t) * pinv_;
        u128 s = t + static_cast<u128>(m) * p_;
        u64 r = static_cast<u64>(s >> 64);
        return r >= p_ ? r - p_ : r;
    }

    u64 p_;
    u64 pinv_;  // -p^{-1} mod 2^64
    u64 r2_;    // 2^128 mod p
    u64 one_;   // 2^64 mod p
};

/// Dense polynomial over Z/p in Montgomery form, low-to-high, no trailing zeros.
using NPoly = std::vector<u64>;

void npoly_trim(NPoly& f);
inline long npoly_degree(const NPoly& f) { return static_cast<long>(f.size()) - 1; }

NPoly npoly_mul(const Montgomery& m, const NPoly& a, const NPoly& b);
NPoly npoly_add(const Montgomery& m, const NPoly& a, const NPoly& b);
NPoly npoly_sub(const Montgomery& m, const NPoly& a, const NPoly& b);
/// In-place remainder; b nonzero.
void npoly_rem_inplace(const Montgomery& m, NPoly& a, const NPoly& b);
/// Quotient and remainder; b nonzero.
void npoly_divrem(const Montgomery& m, const NPoly& a, const NPoly& b, NPoly& q, NPoly& r);
void npoly_make_monic(const Montgomery& m, NPoly& f);
/// Monic gcd (zero if both zero).
NPoly npoly_gcd(const Montgomery& m, NPoly a, NPoly b);
/// Inverse of a modulo h when gcd(a, h) = 1.
std::optional<NPoly> npoly_invmod(const Montgomery& m, const NPoly& a, const NPoly& h);
NPoly npoly_mulmod(const Montgomery& m, const NPoly& a, const NPoly& b, const NPoly& h);
NPoly npoly_powmod(const Montgomery& m, NPoly base, u64 e, const NPoly& h);
NPoly npoly_derivative(const Montgomery& m, const NPoly& f);
u64 npoly_eval(const Montgomery& m, const NPoly& f, u64 x);

/// All distinct roots in Z/p of f (f nonzero), Montgomery form, in no particular order.
std::vector<u64> npoly_roots(const Montgomery& m, const NPoly& f, std::mt19937_64& rng);

}  // namespace orbcol::detail
