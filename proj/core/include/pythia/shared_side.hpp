#pragma once

#include "pythia/triples.hpp"

namespace pythia {

// Which leg of triangle 1 carries the shared length.
enum class SharedMode { EvenLeg, OddLeg };

// Two Pythagorean triangles where the hypotenuse of t2 equals a leg of t1.
struct TrianglePair {
    Triple t1, t2;
    u64 shared;  // = t2.c = the designated leg of t1
    SharedMode mode;

    static TrianglePair make(Triple t1, Triple t2, u64 shared, SharedMode mode);

  private:
    TrianglePair(Triple a, Triple b, u64 s, SharedMode m)
        : t1(a), t2(b), shared(s), mode(m) {}
};

// Family generators. (M, N) always obeys the triple-parameter conditions
// (M > N, coprime, opposite parity); derived quantities are checked, not
// assumed.

// d = 4, n = 2, delta = 1, m = M^2 + N^2. Shared = even leg of t1.
TrianglePair family1(u64 M, u64 N);

// delta = K(M^2 + N^2), d = K * 2mn. Shared = even leg of t1.
TrianglePair family2(u64 K, u64 m, u64 n, u64 M, u64 N);

// delta = K(M^2 + N^2), d = K(m^2 - n^2). Shared = odd leg of t1.
TrianglePair family3(u64 K, u64 m, u64 n, u64 M, u64 N);

// delta = 1, d odd, gcd(d, M^2+N^2) = 1, d > M^2+N^2;
// m = (d + M^2+N^2)/2, n = (d - (M^2+N^2))/2. Shared = odd leg of t1.
TrianglePair family4(u64 d, u64 M, u64 N);

}  // namespace pythia
