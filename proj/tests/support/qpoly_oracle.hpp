#pragma once

// Deliberately naive reference arithmetic for dense polynomials over Q,
// independent of the library's integer-model representation.

#include <gmpxx.h>

#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using QPoly = std::vector<Q>;  // low-to-high, no trailing zeros

inline void trim(QPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline QPoly rem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size()) {
        Q c = a.back() / b.back();
        std::size_t s = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline QPoly monic(QPoly a) {
    if (a.empty()) return a;
    Q c = a.back();
    for (auto& x : a) x /= c;
    return a;
}

inline QPoly gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Q eval(const QPoly& a, const Q& x) {
    Q acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

inline QPoly random_poly(std::mt19937_64& rng, int degree, long height) {
    std::uniform_int_distribution<long> d(-height, height);
    QPoly a(static_cast<std::size_t>(degree) + 1);
    for (auto& c : a) c = Q(d(rng), 1 + std::abs(d(rng)));
    for (auto& c : a) c.canonicalize();
    if (sgn(a.back()) == 0) a.back() = 1;
    return a;
}

}  // namespace oracle
