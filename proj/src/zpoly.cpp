#include "orbcol/detail/zpoly.hpp"

#include <algorithm>

namespace orbcol::detail {

void zvec_trim(ZVec& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

std::size_t zvec_max_bits(const ZVec& a) {
    std::size_t bits = 0;
    for (const auto& c : a)
        if (sgn(c) != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

Integer zvec_content(const ZVec& a, Integer seed) {
    Integer g = abs(seed);
    for (const auto& c : a) {
        if (g == 1) break;
        if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

void zvec_addmul(ZVec& a, const ZVec& b, const Integer& s) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) mpz_addmul(a[i].get_mpz_t(), b[i].get_mpz_t(), s.get_mpz_t());
}

ZVec zvec_mul_schoolbook(const ZVec& a, const ZVec& b) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    zvec_trim(r);
    return r;
}

namespace {

constexpr std::size_t kLimbBits = 64;
static_assert(sizeof(mp_limb_t) * 8 == kLimbBits, "64-bit GMP limbs expected");

// Packs sum a_i 2^(i*limbs*64) for a signed vector into one integer.
Integer kronecker_pack(const ZVec& a, std::size_t limbs) {
    std::vector<mp_limb_t> pos(a.size() * limbs, 0), neg(a.size() * limbs, 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int s = sgn(a[i]);
        if (s == 0) continue;
        auto& dst = s > 0 ? pos : neg;
        any_neg |= s < 0;
        std::size_t count = 0;
        mpz_export(dst.data() + i * limbs, &count, -1, sizeof(mp_limb_t), 0, 0, a[i].get_mpz_t());
    }
    Integer p, n;
    mpz_import(p.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
    if (any_neg) {
        mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
        p -= n;
    }
    return p;
}

ZVec kronecker_unpack(const Integer& value, std::size_t limbs, std::size_t count) {
    ZVec out(count);
    int sign = sgn(value);
    if (sign == 0) return out;
    Integer mag = abs(value);
    std::size_t nlimbs = mpz_size(mag.get_mpz_t());
    std::vector<mp_limb_t> buf(std::max(nlimbs, count * limbs) + limbs, 0);
    std::size_t written = 0;
    mpz_export(buf.data(), &written, -1, sizeof(mp_limb_t), 0, 0, mag.get_mpz_t());
    Integer half, base;
    mpz_ui_pow_ui(base.get_mpz_t(), 2, limbs * kLimbBits);
    half = base / 2;
    bool carry = false;
    for (std::size_t i = 0; i < count; ++i) {
        Integer d;
        mpz_import(d.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
        if (carry) d += 1;
        if (d >= half) {
            d -= base;
            carry = true;
        } else {
            carry = false;
        }
        out[i] = sign > 0 ? d : Integer(-d);
    }
    return out;
}

}  // namespace

ZVec zvec_mul(const ZVec& a, const ZVec& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = std::min(a.size(), b.size());
    if (n < 8) return zvec_mul_schoolbook(a, b);
    std::size_t bits = zvec_max_bits(a) + zvec_max_bits(b);
    if (bits == 0) return {};
    std::size_t lg = 1;
    while ((std::size_t{1} << lg) < n) ++lg;
    bits += lg + 2;
    std::size_t limbs = (bits + kLimbBits - 1) / kLimbBits;
    Integer pa = kronecker_pack(a, limbs);
    Integer pb = kronecker_pack(b, limbs);
    Integer prod = pa * pb;
    ZVec r = kronecker_unpack(prod, limbs, a.size() + b.size() - 1);
    zvec_trim(r);
    return r;
}

}  // namespace orbcol::detail
