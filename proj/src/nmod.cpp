#include "orbcol/detail/nmod.hpp"

#include <algorithm>
#include <mutex>

namespace orbcol::detail {

namespace {

u64 mulmod_plain(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 powmod_plain(u64 a, u64 e, u64 n) {
    u64 r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod_plain(r, a, n);
        a = mulmod_plain(a, a, n);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all 64-bit integers.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_plain(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_plain(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 modular_prime(std::size_t k) {
    static std::mutex mutex;
    static std::vector<u64> primes;
    std::lock_guard lock(mutex);
    u64 candidate = primes.empty() ? (1ULL << 62) - 1 : primes.back() - 2;
    while (primes.size() <= k) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return primes[k];
}

Montgomery::Montgomery(u64 p) : p_(p) {
    u64 x = p;  // inverse of p modulo 2^64 by Newton iteration
    for (int i = 0; i < 6; ++i) x *= 2 - p * x;
    pinv_ = ~x + 1;
    one_ = static_cast<u64>((static_cast<u128>(1) << 64) % p);
    r2_ = static_cast<u64>(static_cast<u128>(one_) * one_ % p);
}

u64 Montgomery::pow(u64 a, u64 e) const {
    u64 r = one_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::optional<u64> Montgomery::sqrt(u64 a) const {
    if (a == 0) return 0;
    if (pow(a, (p_ - 1) / 2) != one_) return std::nullopt;
    // Tonelli-Shanks.
    u64 q = p_ - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = to(2);
    u64 minus_one = neg(one_);
    while (pow(z, (p_ - 1) / 2) != minus_one) z = add(z, one_);
    u64 c = pow(z, q);
    u64 r = pow(a, (q + 1) / 2);
    u64 t = pow(a, q);
    int mexp = s;
    while (t != one_) {
        int i = 0;
        u64 tt = t;
        while (tt != one_) {
            tt = mul(tt, tt);
            ++i;
        }
        u64 b = c;
        for (int j = 0; j < mexp - i - 1; ++j) b = mul(b, b);
        mexp = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

void npoly_trim(NPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

NPoly npoly_add(const Montgomery& m, const NPoly& a, const NPoly& b) {
    NPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = m.add(r[i], b[i]);
    npoly_trim(r);
    return r;
}

NPoly npoly_sub(const Montgomery& m, const NPoly& a, const NPoly& b) {
    NPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = m.sub(r[i], b[i]);
    npoly_trim(r);
    return r;
}

namespace {

void mul_school(const Montgomery& m, const u64* a, std::size_t na, const u64* b, std::size_t nb, u64* out) {
    for (std::size_t i = 0; i < na; ++i) {
        u64 ai = a[i];
        if (ai == 0) continue;
        u64* o = out + i;
        for (std::size_t j = 0; j < nb; ++j) o[j] = m.add(o[j], m.mul(ai, b[j]));
    }
}

// out += a*b, with na == nb == n.
void mul_karatsuba(const Montgomery& m, const u64* a, const u64* b, std::size_t n, u64* out) {
    if (n <= 48) {
        mul_school(m, a, n, b, n, out);
        return;
    }
    std::size_t h = n / 2, hi = n - h;
    std::vector<u64> z0(2 * h, 0), z2(2 * hi, 0), z1(2 * hi, 0), sa(hi), sb(hi);
    mul_karatsuba(m, a, b, h, z0.data());
    mul_karatsuba(m, a + h, b + h, hi, z2.data());
    for (std::size_t i = 0; i < hi; ++i) {
        sa[i] = i < h ? m.add(a[i], a[h + i]) : a[h + i];
        sb[i] = i < h ? m.add(b[i], b[h + i]) : b[h + i];
    }
    mul_karatsuba(m, sa.data(), sb.data(), hi, z1.data());
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = m.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = m.sub(z1[i], z2[i]);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = m.add(out[i], z0[i]);
    for (std::size_t i = 0; i < z1.size(); ++i) out[h + i] = m.add(out[h + i], z1[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = m.add(out[2 * h + i], z2[i]);
}

}  // namespace

NPoly npoly_mul(const Montgomery& m, const NPoly& a, const NPoly& b) {
    if (a.empty() || b.empty()) return {};
    NPoly r(a.size() + b.size() - 1, 0);
    std::size_t na = a.size(), nb = b.size();
    if (std::min(na, nb) <= 48) {
        mul_school(m, a.data(), na, b.data(), nb, r.data());
    } else {
        // Split the longer operand into chunks of the shorter one's length.
        const NPoly& lo = na <= nb ? a : b;
        const NPoly& hi = na <= nb ? b : a;
        std::size_t n = lo.size();
        std::vector<u64> chunk(n), prod(2 * n, 0);
        for (std::size_t off = 0; off < hi.size(); off += n) {
            std::size_t len = std::min(n, hi.size() - off);
            std::fill(chunk.begin(), chunk.end(), 0);
            std::copy(hi.begin() + static_cast<long>(off), hi.begin() + static_cast<long>(off + len), chunk.begin());
            std::fill(prod.begin(), prod.end(), 0);
            mul_karatsuba(m, lo.data(), chunk.data(), n, prod.data());
            for (std::size_t i = 0; i < prod.size() && off + i < r.size(); ++i) r[off + i] = m.add(r[off + i], prod[i]);
        }
    }
    npoly_trim(r);
    return r;
}

void npoly_rem_inplace(const Montgomery& m, NPoly& a, const NPoly& b) {
    if (a.size() < b.size()) return;
    std::size_t db = b.size() - 1;
    u64 binv = m.inv(b.back());
    for (std::size_t i = a.size(); i-- > db;) {
        u64 c = a[i];
        if (c == 0) continue;
        u64 f = m.mul(c, binv);
        u64* base = a.data() + (i - db);
        for (std::size_t j = 0; j < db; ++j) base[j] = m.sub(base[j], m.mul(f, b[j]));
        a[i] = 0;
    }
    npoly_trim(a);
}

void npoly_divrem(const Montgomery& m, const NPoly& a, const NPoly& b, NPoly& q, NPoly& r) {
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    std::size_t db = b.size() - 1;
    q.assign(a.size() - db, 0);
    u64 binv = m.inv(b.back());
    for (std::size_t i = r.size(); i-- > db;) {
        u64 c = r[i];
        if (c == 0) continue;
        u64 f = m.mul(c, binv);
        q[i - db] = f;
        u64* base = r.data() + (i - db);
        for (std::size_t j = 0; j < db; ++j) base[j] = m.sub(base[j], m.mul(f, b[j]));
        r[i] = 0;
    }
    npoly_trim(r);
    npoly_trim(q);
}

void npoly_make_monic(const Montgomery& m, NPoly& f) {
    if (f.empty() || f.back() == m.one()) return;
    u64 inv = m.inv(f.back());
    for (auto& c : f) c = m.mul(c, inv);
}

NPoly npoly_gcd(const Montgomery& m, NPoly a, NPoly b) {
    npoly_trim(a);
    npoly_trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        npoly_rem_inplace(m, a, b);
        std::swap(a, b);
    }
    npoly_make_monic(m, a);
    return a;
}

std::optional<NPoly> npoly_invmod(const Montgomery& m, const NPoly& a, const NPoly& h) {
    // Extended Euclid tracking only the coefficient of a.
    NPoly r0 = h, r1 = a, s0, s1{m.one()};
    npoly_rem_inplace(m, r1, h);
    if (r1.empty()) return std::nullopt;
    while (!r1.empty()) {
        NPoly q, r;
        npoly_divrem(m, r0, r1, q, r);
        NPoly s = npoly_sub(m, s0, npoly_mul(m, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) return std::nullopt;
    u64 inv = m.inv(r0[0]);
    for (auto& c : s0) c = m.mul(c, inv);
    npoly_rem_inplace(m, s0, h);
    return s0;
}

NPoly npoly_mulmod(const Montgomery& m, const NPoly& a, const NPoly& b, const NPoly& h) {
    NPoly r = npoly_mul(m, a, b);
    npoly_rem_inplace(m, r, h);
    return r;
}

NPoly npoly_powmod(const Montgomery& m, NPoly base, u64 e, const NPoly& h) {
    NPoly r{m.one()};
    npoly_rem_inplace(m, r, h);
    npoly_rem_inplace(m, base, h);
    while (e) {
        if (e & 1) r = npoly_mulmod(m, r, base, h);
        e >>= 1;
        if (e) base = npoly_mulmod(m, base, base, h);
    }
    return r;
}

NPoly npoly_derivative(const Montgomery& m, const NPoly& f) {
    if (f.size() <= 1) return {};
    NPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = m.mul(f[i], m.to(i));
    npoly_trim(d);
    return d;
}

u64 npoly_eval(const Montgomery& m, const NPoly& f, u64 x) {
    u64 r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = m.add(m.mul(r, x), f[i]);
    return r;
}

namespace {

void split_roots(const Montgomery& m, const NPoly& g, std::mt19937_64& rng, std::vector<u64>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        // g monic: x + c
        out.push_back(m.neg(m.mul(g[0], m.inv(g[1]))));
        return;
    }
    u64 p = m.modulus();
    for (;;) {
        u64 shift = m.to(rng() % p);
        NPoly base{shift, m.one()};
        NPoly pw = npoly_powmod(m, base, (p - 1) / 2, g);
        pw = npoly_sub(m, pw, NPoly{m.one()});
        NPoly d = npoly_gcd(m, g, pw);
        if (d.size() > 1 && d.size() < g.size()) {
            NPoly q, r;
            npoly_divrem(m, g, d, q, r);
            npoly_make_monic(m, q);
            split_roots(m, d, rng, out);
            split_roots(m, q, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<u64> npoly_roots(const Montgomery& m, const NPoly& f, std::mt19937_64& rng) {
    std::vector<u64> out;
    if (f.size() <= 1) return out;
    NPoly fm = f;
    npoly_make_monic(m, fm);
    NPoly xp = npoly_powmod(m, NPoly{0, m.one()}, m.modulus(), fm);
    NPoly g = npoly_gcd(m, fm, npoly_sub(m, xp, NPoly{0, m.one()}));
    split_roots(m, g, rng, out);
    return out;
}

}  // namespace orbcol::detail
