#include "orbcol/elliptic.hpp"
#include "orbcol/specialize.hpp"

namespace orbcol {

TorsionVerdict is_torsion_section(const CurveFF& C, const PointFF& P, long Nmax) {
    using Kind = TorsionVerdict::Kind;
    if (P.is_infinity()) return {Kind::TorsionOfOrder, 1};
    // Specialization is injective on torsion at good fibers, so a fiber point
    // of infinite order forces P to have infinite order.
    int tried = 0;
    for (long k = 0; k <= 40 && tried < 8; ++k) {
        // 0, 1, -1, 2, -2, ...
        Rational l0 = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-k / 2);
        FiberPoint fp;
        try {
            fp = specialize(C, P, Base::rational(C.field(), l0));
        } catch (const BadFiber&) {
            continue;
        }
        if (!fiber_over_Q(fp)) continue;
        ++tried;
        auto t = torsion_order_at(fp, 12);
        if (t.front().proven_non_torsion) return {Kind::NonTorsion, 0};
    }
    Multiples mp(C, P);
    for (long n = 1; n <= Nmax; ++n)
        if (mp.at(n).is_infinity()) return {Kind::TorsionOfOrder, n};
    return {Kind::UnknownBeyond, Nmax};
}

}  // namespace orbcol
