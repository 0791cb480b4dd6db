#include "pythia/shared_side.hpp"

namespace pythia {

namespace {

void require_mn(u64 M, u64 N, const char* who) {
    if (N == 0) throw domain_error(std::string(who) + ": N must be >= 1");
    if (M <= N) throw domain_error(std::string(who) + ": requires M > N");
    if (gcd(M, N) != 1)
        throw domain_error(std::string(who) + ": requires gcd(M, N) = 1");
    if ((M + N) % 2 == 0)
        throw domain_error(std::string(who) + ": requires M + N odd");
}

// Leg of t as produced by the parametrization, before canonical reordering.
u64 leg_of(const TripleParams& p, SharedMode mode) {
    return mode == SharedMode::EvenLeg
               ? checked_mul(p.delta, checked_mul(2, checked_mul(p.m, p.n)))
               : checked_mul(p.delta,
                             checked_sub(checked_sq(p.m), checked_sq(p.n)));
}

TrianglePair build(const TripleParams& p1, const TripleParams& p2,
                   SharedMode mode) {
    const Triple t1 = triple_from_params(p1);
    const Triple t2 = triple_from_params(p2);
    const u64 shared = leg_of(p1, mode);
    return TrianglePair::make(t1, t2, shared, mode);
}

}  // namespace

TrianglePair TrianglePair::make(Triple t1, Triple t2, u64 shared,
                                SharedMode mode) {
    if (shared != t2.c)
        throw domain_error("TrianglePair: shared length must be the hypotenuse of t2");
    if (shared != t1.a && shared != t1.b)
        throw domain_error("TrianglePair: shared length must be a leg of t1");
    return TrianglePair(t1, t2, shared, mode);
}

TrianglePair family1(u64 M, u64 N) {
    require_mn(M, N, "family1");
    const u64 m = checked_add(checked_sq(M), checked_sq(N));
    // M, N of opposite parity make M^2 + N^2 odd, so (m, 2) is a valid
    // parameter pair; checked by TripleParams::make.
    return build(TripleParams::make(1, m, 2), TripleParams::make(4, M, N),
                 SharedMode::EvenLeg);
}

TrianglePair family2(u64 K, u64 m, u64 n, u64 M, u64 N) {
    if (K == 0) throw domain_error("family2: K must be positive");
    require_mn(M, N, "family2");
    const u64 S = checked_add(checked_sq(M), checked_sq(N));
    const u64 delta = checked_mul(K, S);
    const u64 d = checked_mul(K, checked_mul(2, checked_mul(m, n)));
    return build(TripleParams::make(delta, m, n), TripleParams::make(d, M, N),
                 SharedMode::EvenLeg);
}

TrianglePair family3(u64 K, u64 m, u64 n, u64 M, u64 N) {
    if (K == 0) throw domain_error("family3: K must be positive");
    require_mn(M, N, "family3");
    // Validates (m, n) before the subtraction below.
    TripleParams::make(1, m, n);
    const u64 S = checked_add(checked_sq(M), checked_sq(N));
    const u64 delta = checked_mul(K, S);
    const u64 d = checked_mul(K, checked_sub(checked_sq(m), checked_sq(n)));
    return build(TripleParams::make(delta, m, n), TripleParams::make(d, M, N),
                 SharedMode::OddLeg);
}

TrianglePair family4(u64 d, u64 M, u64 N) {
    require_mn(M, N, "family4");
    if (d % 2 == 0) throw domain_error("family4: d must be odd");
    const u64 S = checked_add(checked_sq(M), checked_sq(N));
    if (d <= S) throw domain_error("family4: requires d > M^2 + N^2");
    if (gcd(d, S) != 1)
        throw domain_error("family4: requires gcd(d, M^2 + N^2) = 1");
    const u64 m = checked_add(d, S) / 2;
    const u64 n = checked_sub(d, S) / 2;
    // m + n = d is odd and any common divisor of m, n divides both d and
    // M^2 + N^2; TripleParams::make asserts both conditions.
    return build(TripleParams::make(1, m, n), TripleParams::make(d, M, N),
                 SharedMode::OddLeg);
}

}  // namespace pythia
