#pragma once

// Regular representation of Z[theta] on the basis (1, theta): an element
// acts by a 2x2 integer matrix and its norm is the determinant.

#include <array>
#include <cstdint>

namespace oracle {

struct Mat2 {
    std::array<__int128, 4> e{};  // row-major
};

inline Mat2 mat_of(__int128 a, __int128 b, __int128 c1, __int128 c0) {
    // theta^2 = c1 theta + c0
    return {{a, b * c0, b, a + b * c1}};
}

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return {{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3], x.e[2] * y.e[0] + x.e[3] * y.e[2],
             x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
}

inline __int128 det(const Mat2& x) { return x.e[0] * x.e[3] - x.e[1] * x.e[2]; }

// Coordinates of the element whose matrix is x (first column).
inline std::array<__int128, 2> coords(const Mat2& x) { return {x.e[0], x.e[2]}; }

// Minimal relation of theta straight from its definition, independent of
// the library: returns (c1, c0) with theta^2 = c1 theta + c0.
inline std::array<__int128, 2> theta_relation(std::int64_t D, std::int64_t f) {
    if (D % 4 != 3) return {0, -static_cast<__int128>(f) * f * D};
    // theta = f(1 + s)/2, s^2 = -D: theta^2 = f^2 (1 - D + 2 s)/4 = f theta - f^2 (1 + D)/4
    return {f, -static_cast<__int128>(f) * f * ((1 + D) / 4)};
}

}  // namespace oracle
