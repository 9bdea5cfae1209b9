#include "orbcol/poly.hpp"

#include "orbcol/detail/modular.hpp"

#include <algorithm>
#include <array>

namespace orbcol {

using detail::ZVec;

namespace {

Integer lcm_int(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool all_zero(const ZVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& c) { return sgn(c) == 0; });
}

ZVec scaled_vec(const ZVec& a, const Integer& s) {
    ZVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

ZVec add_vec(const ZVec& a, const ZVec& b) {
    ZVec r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

ZVec sub_vec(const ZVec& a, const ZVec& b) {
    ZVec r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction and canonical form

void Poly::canonicalize() {
    bool quad = field_.degree() == 2;
    if (quad) {
        std::size_t n = std::max(u_.size(), v_.size());
        u_.resize(n);
        v_.resize(n);
        while (!u_.empty() && sgn(u_.back()) == 0 && sgn(v_.back()) == 0) {
            u_.pop_back();
            v_.pop_back();
        }
    } else {
        v_.clear();
        detail::zvec_trim(u_);
    }
    if (u_.empty()) {
        den_ = 1;
        return;
    }
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& c : u_) c = -c;
        for (auto& c : v_) c = -c;
    }
    Integer g = detail::zvec_content(u_, den_);
    if (g != 1) g = detail::zvec_content(v_, g);
    if (g != 1) {
        for (auto& c : u_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        for (auto& c : v_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

void Poly::check_same_field(const Poly& other) const {
    if (field_ != other.field_) throw MathError("polynomials over different coefficient fields");
}

Poly Poly::from_integer_model(const Field& field, ZVec u, ZVec v, Integer den) {
    Poly p(field);
    if (sgn(den) == 0) throw InternalError("zero denominator in integer model");
    p.u_ = std::move(u);
    p.v_ = field.degree() == 2 ? std::move(v) : ZVec{};
    p.den_ = std::move(den);
    p.canonicalize();
    return p;
}

Poly Poly::from_coeffs(const Field& field, const std::vector<FieldElem>& coeffs) {
    Integer den = 1;
    std::vector<FieldElem> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        cs.push_back(field.reduce(c));
        den = lcm_int(den, cs.back().c0.get_den());
        den = lcm_int(den, cs.back().c1.get_den());
    }
    ZVec u(cs.size()), v(field.degree() == 2 ? cs.size() : 0);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        u[i] = cs[i].c0.get_num() * (den / cs[i].c0.get_den());
        if (!v.empty()) v[i] = cs[i].c1.get_num() * (den / cs[i].c1.get_den());
    }
    return from_integer_model(field, std::move(u), std::move(v), den);
}

Poly Poly::from_rationals(const std::vector<Rational>& coeffs, const Field& field) {
    std::vector<FieldElem> cs(coeffs.begin(), coeffs.end());
    return from_coeffs(field, cs);
}

Poly Poly::constant(const Field& field, const FieldElem& c) { return from_coeffs(field, {c}); }

Poly Poly::monomial(const Field& field, const FieldElem& c, std::size_t degree) {
    std::vector<FieldElem> cs(degree + 1);
    cs[degree] = c;
    return from_coeffs(field, cs);
}

Poly Poly::variable(const Field& field) { return monomial(field, FieldElem(1), 1); }

FieldElem Poly::coeff(std::size_t i) const {
    if (i >= u_.size()) return FieldElem();
    Rational a(u_[i], den_);
    a.canonicalize();
    Rational b;
    if (!v_.empty()) {
        b = Rational(v_[i], den_);
        b.canonicalize();
    }
    return {a, b};
}

std::vector<FieldElem> Poly::coeffs() const {
    std::vector<FieldElem> out(u_.size());
    for (std::size_t i = 0; i < u_.size(); ++i) out[i] = coeff(i);
    return out;
}

bool Poly::is_one() const { return u_.size() == 1 && den_ == 1 && u_[0] == 1 && (v_.empty() || sgn(v_[0]) == 0); }

bool Poly::is_monic() const {
    return !u_.empty() && u_.back() == den_ && (v_.empty() || sgn(v_.back()) == 0);
}

// ---------------------------------------------------------------------------
// Ring operations

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.u_) c = -c;
    for (auto& c : r.v_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Integer l = lcm_int(a.den_, b.den_);
    Integer sa = l / a.den_, sb = l / b.den_;
    ZVec u = add_vec(sa == 1 ? a.u_ : scaled_vec(a.u_, sa), sb == 1 ? b.u_ : scaled_vec(b.u_, sb));
    ZVec v;
    if (a.field_.degree() == 2) v = add_vec(scaled_vec(a.v_, sa), scaled_vec(b.v_, sb));
    return Poly::from_integer_model(a.field_, std::move(u), std::move(v), l);
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    Integer den = a.den_ * b.den_;
    if (a.field_.degree() == 1) return Poly::from_integer_model(a.field_, detail::zvec_mul(a.u_, b.u_), {}, den);
    const Field& F = a.field_;
    bool a_rat = all_zero(a.v_), b_rat = all_zero(b.v_);
    ZVec u, v;
    if (a_rat && b_rat) {
        u = detail::zvec_mul(a.u_, b.u_);
    } else if (a_rat) {
        u = detail::zvec_mul(a.u_, b.u_);
        v = detail::zvec_mul(a.u_, b.v_);
    } else if (b_rat) {
        u = detail::zvec_mul(a.u_, b.u_);
        v = detail::zvec_mul(a.v_, b.u_);
    } else {
        // (U1 + V1 t)(U2 + V2 t) with t^2 = -p t - q, three products.
        ZVec uu = detail::zvec_mul(a.u_, b.u_);
        ZVec vv = detail::zvec_mul(a.v_, b.v_);
        ZVec cross = detail::zvec_mul(add_vec(a.u_, a.v_), add_vec(b.u_, b.v_));
        cross = sub_vec(sub_vec(cross, uu), vv);
        u = sub_vec(uu, scaled_vec(vv, F.q()));
        v = sub_vec(cross, scaled_vec(vv, F.p()));
    }
    return Poly::from_integer_model(F, std::move(u), std::move(v), den);
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_) return false;
    return a.den_ == b.den_ && a.u_ == b.u_ && a.v_ == b.v_;
}

Poly Poly::scaled(const FieldElem& c) const { return *this * constant(field_, c); }

Poly Poly::scaled(const Rational& c) const {
    if (sgn(c) == 0) return Poly(field_);
    Poly r = *this;
    for (auto& x : r.u_) x *= c.get_num();
    for (auto& x : r.v_) x *= c.get_num();
    r.den_ *= c.get_den();
    r.canonicalize();
    return r;
}

Poly Poly::pow(unsigned long e) const {
    Poly r = constant(field_, FieldElem(1));
    Poly b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(field_.inv(leading()));
}

Poly Poly::derivative() const {
    if (u_.size() <= 1) return Poly(field_);
    ZVec u(u_.size() - 1), v(v_.empty() ? 0 : v_.size() - 1);
    for (std::size_t i = 1; i < u_.size(); ++i) {
        u[i - 1] = u_[i] * static_cast<unsigned long>(i);
        if (!v.empty()) v[i - 1] = v_[i] * static_cast<unsigned long>(i);
    }
    return from_integer_model(field_, std::move(u), std::move(v), den_);
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r = *this;
    r.u_.insert(r.u_.begin(), k, Integer(0));
    if (!r.v_.empty()) r.v_.insert(r.v_.begin(), k, Integer(0));
    return r;
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem r;
    for (std::size_t i = u_.size(); i-- > 0;) r = field_.mul(r, x) + coeff(i);
    return r;
}

Rational Poly::eval_rational(const Rational& x) const {
    if (!is_rational()) throw MathError("eval_rational on non-rational polynomial");
    // Homogenized integer Horner: sum u_i n^i d^(deg-i), then divide.
    if (u_.empty()) return 0;
    const Integer& n = x.get_num();
    const Integer& d = x.get_den();
    Integer acc = 0, dpow = 1;
    for (std::size_t i = u_.size(); i-- > 0;) {
        acc = acc * n + u_[i] * dpow;
        dpow *= d;
    }
    // acc = sum u_i n^i d^(deg-i); value = acc / (den * d^deg)
    Integer ddeg = 1;
    mpz_pow_ui(ddeg.get_mpz_t(), d.get_mpz_t(), u_.size() - 1);
    Rational r(acc, den_ * ddeg);
    r.canonicalize();
    return r;
}

Poly Poly::rescale_variable(const FieldElem& c) const {
    std::vector<FieldElem> cs = coeffs();
    FieldElem pw(1);
    for (auto& x : cs) {
        x = field_.mul(x, pw);
        pw = field_.mul(pw, c);
    }
    return from_coeffs(field_, cs);
}

// ---------------------------------------------------------------------------
// Division

DivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw MathError("division by the zero polynomial");
    if (a.field() != b.field()) throw MathError("polynomials over different coefficient fields");
    const Field& F = a.field();
    if (a.degree() < b.degree()) return {Poly(F), a};
    std::vector<FieldElem> r = a.coeffs();
    std::vector<FieldElem> bc = b.monic().coeffs();
    FieldElem lcinv = F.inv(b.leading());
    std::size_t db = bc.size() - 1;
    std::vector<FieldElem> q(r.size() - db);
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].is_zero()) continue;
        FieldElem c = r[i];
        q[i - db] = c;
        for (std::size_t j = 0; j < db; ++j)
            if (!bc[j].is_zero()) r[i - db + j] = r[i - db + j] - F.mul(c, bc[j]);
        r[i] = FieldElem();
    }
    r.resize(db);
    Poly quot = Poly::from_coeffs(F, q).scaled(lcinv);
    return {quot, Poly::from_coeffs(F, r)};
}

Poly rem(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

namespace {

// Exact division of A by C in Z[x] (quadratic = false) or Z[t][x], where the
// leading coefficient of C is the integer cu.back() (cv.back() == 0). Returns
// false as soon as a quotient coefficient fails to be integral or a nonzero
// remainder appears.
bool zt_exact_divide(const Field& F, ZVec au, ZVec av, const ZVec& cu, const ZVec& cv, ZVec* qu, ZVec* qv) {
    bool quad = F.degree() == 2;
    if (quad) av.resize(au.size());
    std::size_t dc = cu.size() - 1;
    const Integer& lc = cu.back();
    if (au.size() < cu.size()) {
        if (!all_zero(au) || (quad && !all_zero(av))) return false;
        if (qu) qu->clear();
        if (qv) qv->clear();
        return true;
    }
    std::size_t nq = au.size() - dc;
    ZVec ou(nq), ov(quad ? nq : 0);
    Integer tu, tv, tmp;
    for (std::size_t i = au.size(); i-- > dc;) {
        bool zu = sgn(au[i]) == 0, zv = !quad || sgn(av[i]) == 0;
        if (zu && zv) continue;
        if (!zu && !mpz_divisible_p(au[i].get_mpz_t(), lc.get_mpz_t())) return false;
        if (!zv && !mpz_divisible_p(av[i].get_mpz_t(), lc.get_mpz_t())) return false;
        mpz_divexact(tu.get_mpz_t(), au[i].get_mpz_t(), lc.get_mpz_t());
        if (quad) mpz_divexact(tv.get_mpz_t(), av[i].get_mpz_t(), lc.get_mpz_t());
        std::size_t off = i - dc;
        ou[off] = tu;
        if (quad) ov[off] = tv;
        // subtract (tu + tv t) * C * x^off
        for (std::size_t j = 0; j < cu.size(); ++j) {
            mpz_submul(au[off + j].get_mpz_t(), tu.get_mpz_t(), cu[j].get_mpz_t());
            if (quad) {
                const Integer& cvj = cv[j];
                mpz_submul(av[off + j].get_mpz_t(), tu.get_mpz_t(), cvj.get_mpz_t());
                if (sgn(tv) != 0) {
                    mpz_submul(av[off + j].get_mpz_t(), tv.get_mpz_t(), cu[j].get_mpz_t());
                    // tv * cv * t^2 = tv * cv * (-p t - q)
                    if (sgn(cvj) != 0) {
                        tmp = tv * cvj;
                        mpz_addmul(au[off + j].get_mpz_t(), tmp.get_mpz_t(), F.q().get_mpz_t());
                        mpz_addmul(av[off + j].get_mpz_t(), tmp.get_mpz_t(), F.p().get_mpz_t());
                    }
                }
            }
        }
    }
    for (std::size_t i = 0; i < dc; ++i) {
        if (sgn(au[i]) != 0) return false;
        if (quad && sgn(av[i]) != 0) return false;
    }
    if (qu) *qu = std::move(ou);
    if (qv) *qv = std::move(ov);
    return true;
}

// Norm of u + v t in Z[t]/(t^2 + p t + q).
Integer zt_norm(const Field& F, const Integer& u, const Integer& v) { return u * u - F.p() * u * v + F.q() * v * v; }

// Multiplies (u, v) by the conjugate of its leading coefficient, making the
// leading coefficient the integer norm.
void zt_make_lc_integral(const Field& F, ZVec& u, ZVec& v) {
    if (F.degree() == 1 || sgn(v.back()) == 0) return;
    // conj(a + b t) = (a - b p) - b t
    Integer ca = u.back() - v.back() * F.p();
    Integer cb = -v.back();
    ZVec nu(u.size()), nv(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        // (u + v t)(ca + cb t) = u ca - q v cb + (u cb + v ca - p v cb) t
        Integer vcb = v[i] * cb;
        nu[i] = u[i] * ca - F.q() * vcb;
        nv[i] = u[i] * cb + v[i] * ca - F.p() * vcb;
    }
    u = std::move(nu);
    v = std::move(nv);
}

Integer index_bound(const Field& F) { return F.degree() == 1 ? Integer(1) : Integer(abs(F.discriminant())); }

// Quotient a / b over the field if exact (exact == true on success).
Poly exact_quotient_impl(const Poly& a, const Poly& b, bool& exact) {
    const Field& F = a.field();
    exact = true;
    if (a.is_zero()) return Poly(F);
    ZVec bu = b.u(), bv = b.v();
    if (F.degree() == 2) bv.resize(bu.size());
    Integer n = 1;
    ZVec au = a.u(), av = a.v();
    if (F.degree() == 2) {
        av.resize(au.size());
        if (sgn(bv.back()) != 0) {
            // a/b = (a * conj(lc b)) / (b * conj(lc b))
            Integer ca = bu.back() - bv.back() * F.p();
            Integer cb = -bv.back();
            ZVec lcu{ca}, lcv{cb};
            Poly conj_lc = Poly::from_integer_model(F, lcu, lcv, 1);
            Poly aa = Poly::from_integer_model(F, au, av, 1) * conj_lc;
            zt_make_lc_integral(F, bu, bv);
            au = aa.u();
            av = aa.v();
            av.resize(au.size());
            // aa was canonicalized; account for its denominator
            n = aa.den();
        }
    }
    // With C = bu (lc integer L): A / C = (A / H) / L where H = C / L monic,
    // and k * (A / H) is integral, so k * L * A / C is integral.
    Integer L = bu.back();
    Integer k = index_bound(F);
    Integer scale = k * abs(L);
    ZVec su = scaled_vec(au, scale), sv = F.degree() == 2 ? scaled_vec(av, scale) : ZVec{};
    ZVec qu, qv;
    if (!zt_exact_divide(F, std::move(su), std::move(sv), bu, bv, &qu, &qv)) {
        exact = false;
        return Poly(F);
    }
    // a / b = (au/a.den) / (bu'/b.den) with extra factors: result = q * b.den / (a.den * scale * n)
    Integer den = a.den() * scale * n;
    Poly q = Poly::from_integer_model(F, std::move(qu), std::move(qv), den);
    return q.scaled(Rational(b.den()));
}

}  // namespace

Poly exact_quotient(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw MathError("division by the zero polynomial");
    if (a.field() != b.field()) throw MathError("polynomials over different coefficient fields");
    bool exact = false;
    Poly q = exact_quotient_impl(a, b, exact);
    if (!exact) throw InternalError("exact_quotient: divisor does not divide dividend");
    return q;
}

bool divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) throw MathError("division by the zero polynomial");
    if (a.field() != b.field()) throw MathError("polynomials over different coefficient fields");
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    bool exact = false;
    exact_quotient_impl(a, b, exact);
    return exact;
}

// ---------------------------------------------------------------------------
// GCD

Poly gcd_euclid(const Poly& f, const Poly& g) {
    Poly a = f.monic(), b = g.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = rem(a, b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

Poly gcd_modular(const Poly& f, const Poly& g) {
    const Field& F = f.field();
    bool quad = F.degree() == 2;
    ZVec fu = f.u(), fv = f.v(), gu = g.u(), gv = g.v();
    if (quad) {
        fv.resize(fu.size());
        gv.resize(gu.size());
    }
    Integer gamma;
    if (quad) {
        Integer nf = zt_norm(F, fu.back(), fv.back());
        Integer ng = zt_norm(F, gu.back(), gv.back());
        mpz_gcd(gamma.get_mpz_t(), nf.get_mpz_t(), ng.get_mpz_t());
        gamma *= index_bound(F);
    } else {
        mpz_gcd(gamma.get_mpz_t(), fu.back().get_mpz_t(), gu.back().get_mpz_t());
    }
    Integer k = index_bound(F);

    long best = std::min(f.degree(), g.degree()) + 1;
    detail::CrtAccumulator cu, cv;
    std::size_t consecutive_stable = 0;
    for (std::size_t k_prime = 0;; ++k_prime) {
        if (k_prime > 100000) throw InternalError("modular gcd did not converge");
        auto img = detail::prime_image(F, k_prime);
        if (!img) continue;
        const auto& m = img->mont;
        detail::u64 p = m.modulus();
        detail::u64 gm = m.to(mpz_fdiv_ui(gamma.get_mpz_t(), p));
        if (gm == 0) continue;
        std::array<detail::NPoly, 2> h;
        bool bad = false;
        long deg = -2;
        for (int e = 0; e < img->embeddings; ++e) {
            detail::NPoly a = detail::reduce_image(*img, e, fu, fv);
            detail::NPoly b = detail::reduce_image(*img, e, gu, gv);
            if (detail::npoly_degree(a) != f.degree() || detail::npoly_degree(b) != g.degree()) {
                bad = true;
                break;
            }
            h[e] = detail::npoly_gcd(m, std::move(a), std::move(b));
            long d = detail::npoly_degree(h[e]);
            if (deg == -2) deg = d;
            else if (d != deg) {
                bad = true;
                deg = std::min(deg, d);
            }
        }
        if (deg == -2) continue;
        if (deg == 0) return Poly::constant(F, FieldElem(1));
        if (bad) {
            if (deg < best) {
                // The lower degree is informative even if this prime is unusable.
                best = deg;
                cu = {};
                cv = {};
                consecutive_stable = 0;
            }
            continue;
        }
        if (deg > best) continue;
        if (deg < best) {
            best = deg;
            cu = {};
            cv = {};
            consecutive_stable = 0;
        }
        // Recover (u, v) residues of gamma * H.
        std::size_t n = static_cast<std::size_t>(deg) + 1;
        std::vector<detail::u64> ru(n), rv(quad ? n : 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (!quad) {
                ru[i] = m.from(m.mul(h[0][i], gm));
            } else {
                detail::recover_components(*img, m.mul(h[0][i], gm), m.mul(h[1][i], gm), ru[i], rv[i]);
            }
        }
        bool stable = cu.add(ru, p);
        if (quad) stable = cv.add(rv, p) && stable;
        if (!stable) {
            consecutive_stable = 0;
            continue;
        }
        if (++consecutive_stable > 1) continue;  // already tried this candidate
        ZVec hu = cu.symmetric();
        ZVec hv = quad ? cv.symmetric() : ZVec{};
        // Verify: H = C / gamma divides f and g, i.e. k*gamma*F / C is exact.
        Integer s = k * gamma;
        bool ok = zt_exact_divide(F, scaled_vec(fu, s), quad ? scaled_vec(fv, s) : ZVec{}, hu, hv, nullptr, nullptr) &&
                  zt_exact_divide(F, scaled_vec(gu, s), quad ? scaled_vec(gv, s) : ZVec{}, hu, hv, nullptr, nullptr);
        if (ok) return Poly::from_integer_model(F, std::move(hu), std::move(hv), gamma);
    }
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw MathError("polynomials over different coefficient fields");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return Poly::constant(f.field(), FieldElem(1));
    if (f.degree() == 1 || g.degree() == 1) {
        const Poly& lin = f.degree() == 1 ? f : g;
        const Poly& other = f.degree() == 1 ? g : f;
        FieldElem root = -f.field().div(lin.coeff(0), lin.coeff(1));
        if (other.eval(root).is_zero()) return lin.monic();
        return Poly::constant(f.field(), FieldElem(1));
    }
    return gcd_modular(f, g);
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw MathError("squarefree part of the zero polynomial");
    if (f.degree() <= 1) return f.monic();
    Poly g = gcd(f, f.derivative());
    if (g.is_constant()) return f.monic();
    return exact_quotient(f, g).monic();
}

// ---------------------------------------------------------------------------
// Ordering and printing

int compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (long i = a.degree(); i >= 0; --i) {
        FieldElem x = a.coeff(static_cast<std::size_t>(i)), y = b.coeff(static_cast<std::size_t>(i));
        if (x.c0 != y.c0) return x.c0 < y.c0 ? -1 : 1;
        if (x.c1 != y.c1) return x.c1 < y.c1 ? -1 : 1;
    }
    return 0;
}

std::string to_string(const Poly& p, const char* var, const char* generator) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        FieldElem c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        bool compound = !c.is_rational() && sgn(c.c0) != 0;
        bool negative = !compound && (c.is_rational() ? sgn(c.c0) < 0 : sgn(c.c1) < 0);
        FieldElem mag = negative ? -c : c;
        std::string coef = compound ? "(" + to_string(mag, generator) + ")" : to_string(mag, generator);
        std::string mono;
        if (i > 0) {
            mono = var;
            if (i > 1) mono += "^" + std::to_string(i);
        }
        std::string term;
        if (mono.empty()) term = coef;
        else if (mag.is_one()) term = mono;
        else term = coef + "*" + mono;
        if (out.empty()) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace orbcol
