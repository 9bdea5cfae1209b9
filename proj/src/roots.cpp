// Rational root finding for polynomials over Q.

#include "orbcol/detail/modular.hpp"
#include "orbcol/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace orbcol {

using detail::ZVec;

namespace {

// Primitive integer model of a rational polynomial, with any lambda factor
// stripped; reports whether 0 was a root.
ZVec primitive_model(const Poly& f, bool& zero_root) {
    if (f.is_zero()) throw MathError("rational roots of the zero polynomial");
    if (!f.is_rational()) throw MathError("rational roots require rational coefficients");
    ZVec u = f.u();
    std::size_t lead_zeros = 0;
    while (sgn(u[lead_zeros]) == 0) ++lead_zeros;
    zero_root = lead_zeros > 0;
    u.erase(u.begin(), u.begin() + static_cast<long>(lead_zeros));
    Integer c = detail::zvec_content(u);
    for (auto& x : u) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return u;
}

// Homogenized value sum u_i a^i b^(n-i); zero iff a/b is a root.
bool is_root(const ZVec& u, const Integer& a, const Integer& b) {
    Integer acc = 0, bpow = 1;
    for (std::size_t i = u.size(); i-- > 0;) {
        acc = acc * a + u[i] * bpow;
        bpow *= b;
    }
    return sgn(acc) == 0;
}

// Factorization of |n| < 2^62 by trial division and Pollard rho.
void factor_u64(detail::u64 n, std::map<detail::u64, int>& out) {
    if (n <= 1) return;
    for (detail::u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (detail::is_prime_u64(n)) {
        ++out[n];
        return;
    }
    std::mt19937_64 rng(n);
    for (;;) {
        detail::u64 c = rng() % (n - 1) + 1;
        auto f = [&](detail::u64 x) { return static_cast<detail::u64>((static_cast<detail::u128>(x) * x + c) % n); };
        detail::u64 x = rng() % n, y = x, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) {
            factor_u64(d, out);
            factor_u64(n / d, out);
            return;
        }
    }
}

std::vector<Integer> divisors_of(const Integer& n) {
    Integer a = abs(n);
    if (!mpz_fits_ulong_p(a.get_mpz_t()) || a >= (Integer(1) << 62))
        throw MathError("coefficient too large for divisor search");
    std::map<detail::u64, int> fac;
    factor_u64(mpz_get_ui(a.get_mpz_t()), fac);
    std::vector<Integer> divs{Integer(1)};
    for (auto [p, e] : fac) {
        std::size_t n0 = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= static_cast<unsigned long>(p);
            for (std::size_t i = 0; i < n0; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots_divisor_search(const Poly& f) {
    bool zero_root = false;
    ZVec u = primitive_model(f, zero_root);
    std::set<Rational> roots;
    if (zero_root) roots.insert(Rational(0));
    if (u.size() > 1) {
        auto nums = divisors_of(u.front());
        auto dens = divisors_of(u.back());
        for (const auto& b : dens)
            for (const auto& a : nums) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                if (g != 1) continue;
                if (is_root(u, a, b)) roots.insert(Rational(a, b));
                if (is_root(u, -a, b)) roots.insert(Rational(-a, b));
            }
    }
    return {roots.begin(), roots.end()};
}

std::vector<Rational> rational_roots(const Poly& f) {
    bool zero_root = false;
    ZVec u = primitive_model(f, zero_root);
    const Integer limit = Integer(1) << 40;
    if (abs(u.front()) < limit && abs(u.back()) < limit) return rational_roots_divisor_search(f);

    // Modular route: roots of the squarefree part modulo a good prime, lifted
    // by Newton iteration, reconstructed, and checked exactly.
    std::set<Rational> roots;
    if (zero_root) roots.insert(Rational(0));
    Poly sq = squarefree_part(Poly::from_integer_model(Field(), u, {}, 1));
    ZVec w = sq.u();
    Integer c = detail::zvec_content(w);
    for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    if (w.size() <= 1) return {roots.begin(), roots.end()};
    const Integer bound_num = abs(w.front()), bound_den = abs(w.back());
    Integer need = 2 * bound_num * bound_den + 1;
    std::mt19937_64 rng(12345);
    for (std::size_t k = 0;; ++k) {
        detail::u64 p = detail::modular_prime(k);
        if (mpz_fdiv_ui(w.back().get_mpz_t(), p) == 0) continue;
        detail::Montgomery m(p);
        detail::NPoly img(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) img[i] = m.to(mpz_fdiv_ui(w[i].get_mpz_t(), p));
        detail::npoly_trim(img);
        if (detail::npoly_gcd(m, img, detail::npoly_derivative(m, img)).size() != 1) continue;
        auto mod_roots = detail::npoly_roots(m, img, rng);
        ZVec dw(w.size() - 1);
        for (std::size_t i = 1; i < w.size(); ++i) dw[i - 1] = w[i] * static_cast<unsigned long>(i);
        for (auto r : mod_roots) {
            Integer x = m.from(r), mod = p;
            auto eval_mod = [](const ZVec& poly, const Integer& at, const Integer& mm) {
                Integer acc = 0;
                for (std::size_t i = poly.size(); i-- > 0;) {
                    acc = acc * at + poly[i];
                    acc %= mm;
                }
                return acc;
            };
            while (mod < need) {
                Integer mod2 = mod * mod;
                Integer fx = eval_mod(w, x, mod2);
                Integer dfx = eval_mod(dw, x, mod2);
                Integer inv;
                if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), mod2.get_mpz_t()) == 0)
                    throw InternalError("Hensel lifting hit a singular root");
                x = (x - fx * inv) % mod2;
                if (x < 0) x += mod2;
                mod = mod2;
            }
            auto cand = detail::rational_reconstruct(x, mod, bound_num, bound_den);
            if (cand && is_root(w, cand->get_num(), cand->get_den())) roots.insert(*cand);
        }
        return {roots.begin(), roots.end()};
    }
}

}  // namespace orbcol
