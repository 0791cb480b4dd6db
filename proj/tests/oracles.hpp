#pragma once

// Brute-force oracles, independent of the parametric generators they check.
// Everything here scans the raw solution space with plain nested loops.

#include <algorithm>
#include <array>
#include <tuple>
#include <vector>

#include "pythia/core_arith.hpp"

namespace oracle {

using pythia::u64;
using pythia::u128;

inline bool square(u128 n) { return pythia::is_perfect_square_u128(n); }

// All (a, b, c) with a <= b, a^2 + b^2 = c^2, c <= max_c.
inline std::vector<std::array<u64, 3>> triples(u64 max_c,
                                               bool primitive_only = false) {
    std::vector<std::array<u64, 3>> out;
    for (u64 a = 1; a <= max_c; ++a)
        for (u64 b = a; b <= max_c; ++b) {
            const u128 cc = u128{a} * a + u128{b} * b;
            if (!square(cc)) continue;
            const u64 c = static_cast<u64>(pythia::isqrt_u128(cc));
            if (c > max_c) continue;
            if (primitive_only && pythia::gcd(a, b) != 1) continue;
            out.push_back({a, b, c});
        }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) {
                  return std::tie(x[2], x[0]) < std::tie(y[2], y[0]);
              });
    return out;
}

// All (x, y, z) with x^2 + 2y^2 = z^2, z <= max_z.
inline std::vector<std::array<u64, 3>> two_two(u64 max_z) {
    std::vector<std::array<u64, 3>> out;
    for (u64 z = 1; z <= max_z; ++z)
        for (u64 x = 1; x < z; ++x) {
            const u64 rest = z * z - x * x;
            if (rest % 2 != 0) continue;
            const u64 y2 = rest / 2;
            const u64 y = pythia::isqrt(y2);
            if (y >= 1 && y * y == y2) out.push_back({x, y, z});
        }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a[2], a[0]) < std::tie(b[2], b[0]);
              });
    return out;
}

// All (x, y, z, t) with x <= y <= z, t^2 = x^2 + y^2 + z^2, t <= max_t.
inline std::vector<std::array<u64, 4>> boxes(u64 max_t) {
    std::vector<std::array<u64, 4>> out;
    for (u64 x = 1; x <= max_t; ++x)
        for (u64 y = x; y <= max_t; ++y) {
            if (x * x + y * y >= max_t * max_t) break;
            for (u64 z = y; z <= max_t; ++z) {
                const u64 tt = x * x + y * y + z * z;
                if (tt > max_t * max_t) break;
                const u64 t = pythia::isqrt(tt);
                if (t * t == tt) out.push_back({x, y, z, t});
            }
        }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a[3], a[0], a[1]) <
                         std::tie(b[3], b[0], b[1]);
              });
    return out;
}

// All (e, e, z, t) with 2e^2 + z^2 = t^2, t <= max_t.
inline std::vector<std::array<u64, 4>> equal_edge_boxes(u64 max_t) {
    std::vector<std::array<u64, 4>> out;
    for (u64 t = 1; t <= max_t; ++t)
        for (u64 e = 1; 2 * e * e < t * t; ++e) {
            const u64 z2 = t * t - 2 * e * e;
            const u64 z = pythia::isqrt(z2);
            if (z >= 1 && z * z == z2) out.push_back({e, e, z, t});
        }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a[3], a[0]) < std::tie(b[3], b[0]);
              });
    return out;
}

}  // namespace oracle
