#include "orbcol/detail/modular.hpp"

namespace orbcol::detail {

namespace {

u64 residue(const Montgomery& m, const Integer& a) { return m.to(mpz_fdiv_ui(a.get_mpz_t(), m.modulus())); }

}  // namespace

std::optional<PrimeImage> prime_image(const Field& field, std::size_t k) {
    u64 p = modular_prime(k);
    PrimeImage img{Montgomery(p), {}, 1};
    if (field.degree() == 1) return img;
    const auto& m = img.mont;
    // t^2 + p t + q: roots (-p +- sqrt(disc)) / 2
    u64 disc = residue(m, field.discriminant());
    if (disc == 0) return std::nullopt;
    auto s = m.sqrt(disc);
    if (!s) return std::nullopt;
    u64 half = m.inv(m.to(2));
    u64 mp = m.neg(residue(m, field.p()));
    img.roots[0] = m.mul(m.add(mp, *s), half);
    img.roots[1] = m.mul(m.sub(mp, *s), half);
    img.embeddings = 2;
    return img;
}

NPoly reduce_image(const PrimeImage& img, int e, const ZVec& u, const ZVec& v) {
    const auto& m = img.mont;
    NPoly out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        u64 c = residue(m, u[i]);
        if (img.embeddings == 2 && i < v.size() && sgn(v[i]) != 0) c = m.add(c, m.mul(residue(m, v[i]), img.roots[e]));
        out[i] = c;
    }
    npoly_trim(out);
    return out;
}

void recover_components(const PrimeImage& img, u64 h1, u64 h2, u64& u, u64& v) {
    const auto& m = img.mont;
    u64 vv = m.mul(m.sub(h1, h2), m.inv(m.sub(img.roots[0], img.roots[1])));
    u64 uu = m.sub(h1, m.mul(vv, img.roots[0]));
    u = m.from(uu);
    v = m.from(vv);
}

bool CrtAccumulator::add(const std::vector<u64>& residues, u64 p) {
    if (sgn(modulus) == 0) {
        values.resize(residues.size());
        for (std::size_t i = 0; i < residues.size(); ++i) mpz_set_ui(values[i].get_mpz_t(), residues[i]);
        modulus = Integer(static_cast<unsigned long>(p));
        return false;
    }
    bool stable = true;
    Integer pz(static_cast<unsigned long>(p));
    u64 minv_mod_p;
    {
        Integer mm = modulus % pz, inv;
        mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
        minv_mod_p = mpz_get_ui(inv.get_mpz_t());
    }
    // Stability is judged on the symmetric representative, which is what
    // callers read back.
    Integer half = modulus / 2, next = modulus * pz, sym;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sym = values[i] > half ? values[i] - modulus : values[i];
        if (mpz_fdiv_ui(sym.get_mpz_t(), p) == residues[i]) {
            if (sgn(sym) < 0) values[i] = sym + next;
            continue;
        }
        stable = false;
        u64 cur = mpz_fdiv_ui(values[i].get_mpz_t(), p);
        u64 diff = residues[i] >= cur ? residues[i] - cur : residues[i] + p - cur;
        u64 t = static_cast<u64>(static_cast<u128>(diff) * minv_mod_p % p);
        values[i] += modulus * static_cast<unsigned long>(t);
    }
    modulus = std::move(next);
    return stable;
}

ZVec CrtAccumulator::symmetric() const {
    ZVec r(values.size());
    Integer half = modulus / 2;
    for (std::size_t i = 0; i < values.size(); ++i) r[i] = values[i] > half ? values[i] - modulus : values[i];
    zvec_trim(r);
    return r;
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m, const Integer& bound_num,
                                             const Integer& bound_den) {
    // Half-extended Euclid on (m, a) until the remainder drops to bound_num.
    Integer r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound_num) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (sgn(s1) == 0 || abs(s1) > bound_den) return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rational out(r1, s1);
    out.canonicalize();
    return out;
}

}  // namespace orbcol::detail
