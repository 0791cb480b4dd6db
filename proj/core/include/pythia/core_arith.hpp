#pragma once

#include <utility>

#include "pythia/checked.hpp"

namespace pythia {

// Greatest common divisor. gcd(0,0) is rejected: it never arises from valid
// parameters, so hitting it means a caller bug.
u64 gcd(u64 a, u64 b);

// Floor square root by integer Newton iteration with a final correction
// step; exact at and around perfect squares.
u64 isqrt(u64 n);
u128 isqrt_u128(u128 n);

bool is_perfect_square(u64 n);
bool is_perfect_square_u128(u128 n);

// Given coprime a, b whose product is a perfect square, both a and b are
// themselves squares; returns (sqrt(a), sqrt(b)). The two precondition
// failures are reported distinctly.
std::pair<u64, u64> coprime_square_split(u64 a, u64 b);

}  // namespace pythia
