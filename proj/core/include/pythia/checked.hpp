#pragma once

#include <cstdint>

#include "pythia/errors.hpp"

namespace pythia {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Upper bound for checked arithmetic results. Full 64 bits by default;
// set_max_width() narrows it (the CLI honors PYTHIA_MAX_WIDTH) so overflow
// paths can be exercised with small inputs.
u64 checked_limit() noexcept;
void set_max_width(unsigned bits);  // 8..64
void reset_max_width() noexcept;

// RAII helper for tests that narrow the width temporarily.
struct WidthGuard {
    explicit WidthGuard(unsigned bits) { set_max_width(bits); }
    ~WidthGuard() { reset_max_width(); }
    WidthGuard(const WidthGuard&) = delete;
    WidthGuard& operator=(const WidthGuard&) = delete;
};

u64 checked_add(u64 a, u64 b);
u64 checked_sub(u64 a, u64 b);  // requires a >= b
u64 checked_mul(u64 a, u64 b);
u64 checked_sq(u64 a);
u64 checked_pow4(u64 a);  // computed in a 128-bit intermediate

}  // namespace pythia
