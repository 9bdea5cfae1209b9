#pragma once

// Brute-force search for relations on rational fibers.

#include "support/fiber_oracle.hpp"

#include <numeric>

namespace brute {

using orbcol::Rational;

/// Rationals n/d in lowest terms with |n| <= H and 1 <= d <= H.
inline std::vector<Rational> small_rationals(long H) {
    std::vector<Rational> out;
    for (long d = 1; d <= H; ++d)
        for (long n = -H; n <= H; ++n)
            if (std::gcd(n, d) == 1) out.emplace_back(n, d);
    for (auto& r : out) r.canonicalize();
    return out;
}

/// Fiber data at l0 when the fiber is good and every listed section is
/// regular there.
struct Fiber {
    oracle::Curve curve;
    std::vector<oracle::Pt> points;
};

inline std::optional<Fiber> good_fiber(const orbcol::CurveFF& C, const std::vector<orbcol::PointFF>& pts,
                                       const Rational& l0) {
    auto fc = oracle::fiber(C, l0);
    if (!fc) return std::nullopt;
    Fiber f{*fc, {}};
    for (const auto& P : pts) {
        auto p = oracle::point_at(*fc, P, l0);
        if (!p) return std::nullopt;
        f.points.push_back(*p);
    }
    return f;
}

/// All m with 0 < |m| <= M and [m]p = target.
inline std::vector<long> multipliers(const oracle::Curve& E, const oracle::Pt& p, const oracle::Pt& target, long M) {
    std::vector<long> out;
    oracle::Pt acc;
    for (long m = 1; m <= M; ++m) {
        acc = E.add(acc, p);
        if (acc == target) out.push_back(m);
        if (E.neg(acc) == target) out.push_back(-m);
    }
    return out;
}

}  // namespace brute
