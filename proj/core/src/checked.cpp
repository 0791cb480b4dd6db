#include "pythia/checked.hpp"

#include <atomic>
#include <limits>

namespace pythia {

namespace {
std::atomic<u64> g_limit{std::numeric_limits<u64>::max()};
}

u64 checked_limit() noexcept { return g_limit.load(std::memory_order_relaxed); }

void set_max_width(unsigned bits) {
    if (bits < 8 || bits > 64)
        throw domain_error("set_max_width: bits must be in [8, 64]");
    const u64 lim = bits == 64 ? std::numeric_limits<u64>::max()
                               : (u64{1} << bits) - 1;
    g_limit.store(lim, std::memory_order_relaxed);
}

void reset_max_width() noexcept {
    g_limit.store(std::numeric_limits<u64>::max(), std::memory_order_relaxed);
}

u64 checked_add(u64 a, u64 b) {
    const u128 r = u128{a} + b;
    if (r > checked_limit()) throw overflow_error("checked_add overflow");
    return static_cast<u64>(r);
}

u64 checked_sub(u64 a, u64 b) {
    if (a < b) throw domain_error("checked_sub: negative result");
    return a - b;
}

u64 checked_mul(u64 a, u64 b) {
    const u128 r = u128{a} * b;
    if (r > checked_limit()) throw overflow_error("checked_mul overflow");
    return static_cast<u64>(r);
}

u64 checked_sq(u64 a) { return checked_mul(a, a); }

u64 checked_pow4(u64 a) {
    const u128 sq = u128{a} * a;
    const u128 r = sq * sq;
    // sq*sq wraps at 2^128 when a >= 2^32; catch that before the limit test.
    if (a > 0 && r / sq != sq) throw overflow_error("checked_pow4 overflow");
    if (r > checked_limit()) throw overflow_error("checked_pow4 overflow");
    return static_cast<u64>(r);
}

}  // namespace pythia
