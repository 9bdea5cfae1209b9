#include "orbcol/quad_order.hpp"

#include <numeric>

namespace orbcol {

namespace {

i64 checked_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw MathError("integer overflow in order arithmetic");
    return r;
}

i64 checked_sub(i64 x, i64 y) {
    i64 r;
    if (__builtin_sub_overflow(x, y, &r)) throw MathError("integer overflow in order arithmetic");
    return r;
}

i64 checked_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw MathError("integer overflow in order arithmetic");
    return r;
}

i64 mod_floor(i64 x, i64 n) {
    i64 r = x % n;
    return r < 0 ? r + n : r;
}

i64 mulmod(i64 x, i64 y, i64 n) {
    return static_cast<i64>(static_cast<__int128>(mod_floor(x, n)) * mod_floor(y, n) % n);
}

bool squarefree(i64 D) {
    for (i64 p = 2; p * p <= D; ++p) {
        if (D % (p * p) == 0) return false;
    }
    return true;
}

void require_odd(i64 a) {
    if (a % 2 == 0) throw MathError("a must be odd, got " + std::to_string(a));
}

}  // namespace

OrderSpec OrderSpec::make(i64 D, i64 f) {
    if (D <= 0 || !squarefree(D)) throw MathError("D must be a squarefree positive integer, got " + std::to_string(D));
    if (f <= 0) throw MathError("f must be a positive integer, got " + std::to_string(f));
    if (D > (i64(1) << 40) || f > (i64(1) << 20)) throw MathError("order parameters too large");
    return {D, f, D % 4 == 3 ? ThetaCase::Case2 : ThetaCase::Case1};
}

i64 OrderSpec::theta_sq_linear() const { return kind == ThetaCase::Case1 ? 0 : f; }

i64 OrderSpec::theta_sq_constant() const {
    i64 f2 = checked_mul(f, f);
    if (kind == ThetaCase::Case1) return -checked_mul(f2, D);
    return -checked_mul(f2, (1 + D) / 4);
}

OrderElem OrderElem::conj() const {
    // theta + conj(theta) = theta_sq_linear
    return {spec, checked_add(a, checked_mul(b, spec.theta_sq_linear())), -b};
}

OrderElem operator+(const OrderElem& x, const OrderElem& y) {
    return {x.spec, checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

OrderElem operator-(const OrderElem& x, const OrderElem& y) {
    return {x.spec, checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

OrderElem operator*(const OrderElem& x, const OrderElem& y) {
    if (!(x.spec == y.spec)) throw MathError("order elements from different orders");
    i64 bd = checked_mul(x.b, y.b);
    i64 a = checked_add(checked_mul(x.a, y.a), checked_mul(bd, x.spec.theta_sq_constant()));
    i64 b = checked_add(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)),
                        checked_mul(bd, x.spec.theta_sq_linear()));
    return {x.spec, a, b};
}

i64 norm(const OrderElem& x) {
    const OrderSpec& s = x.spec;
    i64 f2 = checked_mul(s.f, s.f);
    i64 aa = checked_mul(x.a, x.a), bb = checked_mul(x.b, x.b);
    if (s.kind == ThetaCase::Case1) return checked_add(aa, checked_mul(bb, checked_mul(f2, s.D)));
    i64 ab = checked_mul(checked_mul(x.a, x.b), s.f);
    return checked_add(checked_add(aa, ab), checked_mul(bb, checked_mul(f2, (1 + s.D) / 4)));
}

ShiftWitness solve_shift(const OrderSpec& spec, i64 a) {
    require_odd(a);
    i64 s = 1;
    while (mod_floor(checked_mul(a, s), 4) != 3) ++s;
    const i64 f = spec.f, D = spec.D;
    i64 as = checked_mul(a, s);
    i64 r, m;
    if (spec.kind == ThetaCase::Case1) {
        r = -checked_add(1, as) / 4;
        m = checked_sub(checked_mul(a, r), checked_mul(checked_mul(4, s), checked_mul(checked_mul(f, f), D)));
    } else {
        r = -checked_add(checked_add(1, as), checked_mul(4, checked_mul(f, s))) / 4;
        m = checked_mul(a, r);
        m = checked_add(m, checked_mul(f, checked_add(as, 1) / 2));
        m = checked_add(m, checked_mul(2, checked_mul(r, f)));
        m = checked_add(m, checked_mul(s, checked_mul(checked_mul(f, f), 1 - D)));
    }
    OrderElem lhs{spec, m, -1};
    OrderElem rhs = OrderElem{spec, a, 4} * OrderElem{spec, r, s};
    if (!(lhs == rhs)) throw InternalError("solve_shift produced a witness that does not verify");
    return {a, m, r, s};
}

i64 find_residue(const OrderSpec& spec, i64 M) {
    if (M < 1) throw MathError("M must be positive");
    i64 two_m = checked_mul(2, M);
    std::vector<i64> primes;
    i64 rest = two_m;
    for (i64 p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) primes.push_back(rest);
    for (i64 l = 1; l <= M; ++l) {
        OrderElem x{spec, 2 * l - 1, 4};
        bool ok = true;
        for (i64 p : primes) {
            // N(a + 4 theta) mod p depends only on a mod p.
            OrderElem xr{spec, mod_floor(x.a, p), 4};
            if (norm(xr) % p == 0) {
                ok = false;
                break;
            }
        }
        if (ok) return l;
    }
    throw InternalError("find_residue: no admissible residue class in 1..M");
}

bool CyclicModule::is_valid() const {
    if (N < 1 || theta_rep < 0 || theta_rep >= N) return false;
    // theta_rep^2 - c1 theta_rep - c0 = 0 (mod N)
    i64 lhs = mulmod(theta_rep, theta_rep, N);
    i64 rhs = mod_floor(checked_add(mulmod(spec.theta_sq_linear(), theta_rep, N), mod_floor(spec.theta_sq_constant(), N)), N);
    return lhs == rhs;
}

CyclicModule theta_rep(const OrderSpec& spec, i64 a) {
    ShiftWitness w = solve_shift(spec, a);
    i64 n = norm(OrderElem{spec, a, 4});
    CyclicModule mod{spec, n, mod_floor(w.m, n)};
    if (!mod.is_valid()) throw InternalError("theta_rep violates the minimal relation");
    return mod;
}

i64 induced_map(const CyclicModule& mod, const OrderElem& x) {
    return mod_floor(checked_add(mod_floor(x.a, mod.N), mulmod(x.b, mod.theta_rep, mod.N)), mod.N);
}

bool induced_map_is_bijective(const CyclicModule& mod, const OrderElem& x) {
    return std::gcd(induced_map(mod, x), mod.N) == 1;
}

std::string to_string(const OrderElem& x) {
    if (x.b == 0) return std::to_string(x.a);
    std::string t = x.b == 1 ? "th" : x.b == -1 ? "-th" : std::to_string(x.b) + "*th";
    if (x.a == 0) return t;
    return std::to_string(x.a) + (x.b < 0 ? " - " : " + ") + (std::abs(x.b) == 1 ? "th" : std::to_string(std::abs(x.b)) + "*th");
}

}  // namespace orbcol
