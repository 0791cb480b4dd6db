#include "pythia/core_arith.hpp"

#include <bit>
#include <numeric>

namespace pythia {

u64 gcd(u64 a, u64 b) {
    if (a == 0 && b == 0) throw domain_error("gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

u64 isqrt(u64 n) {
    if (n < 2) return n;
    // Start from a power of two >= sqrt(n); Newton then decreases
    // monotonically to the floor root.
    u64 x = u64{1} << ((std::bit_width(n) + 1) / 2);
    u64 next = (x + n / x) / 2;
    while (next < x) {
        x = next;
        next = (x + n / x) / 2;
    }
    while (u128{x} * x > n) --x;  // correction; at most one step
    return x;
}

u128 isqrt_u128(u128 n) {
    if (n < 2) return static_cast<u64>(n);
    int bits = 0;
    for (u128 t = n; t > 0; t >>= 1) ++bits;
    u128 x = u128{1} << ((bits + 1) / 2);
    u128 next = (x + n / x) / 2;
    while (next < x) {
        x = next;
        next = (x + n / x) / 2;
    }
    while (x * x > n) --x;
    return x;
}

bool is_perfect_square(u64 n) {
    const u64 r = isqrt(n);
    return r * r == n;
}

bool is_perfect_square_u128(u128 n) {
    const u128 r = isqrt_u128(n);
    return r * r == n;
}

std::pair<u64, u64> coprime_square_split(u64 a, u64 b) {
    if (a == 0 || b == 0)
        throw domain_error("coprime_square_split: arguments must be positive");
    if (gcd(a, b) != 1)
        throw domain_error("coprime_square_split: arguments are not coprime");
    const u64 prod = checked_mul(a, b);
    if (!is_perfect_square(prod))
        throw domain_error("coprime_square_split: product is not a perfect square");
    const u64 ra = isqrt(a);
    const u64 rb = isqrt(b);
    // A coprime pair with square product is a pair of squares; if this
    // fires, the arithmetic above is broken.
    if (ra * ra != a || rb * rb != b)
        throw domain_error("coprime_square_split: factor is not a square");
    return {ra, rb};
}

}  // namespace pythia
