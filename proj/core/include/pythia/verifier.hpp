#pragma once

#include <chrono>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pythia/checked.hpp"

namespace pythia {

// Claims checked by bounded exhaustive search. NoTriples is a deliberately
// false claim ("no Pythagorean triples exist") used to prove the harness
// can surface counterexamples.
enum class Claim {
    Result1,
    Result2,
    Result3,
    Prop1,
    Prop2,
    Theorem1,
    Theorem2,
    NoTriples,
};

std::string claim_name(Claim c);          // "result1", "prop1", ...
Claim claim_from_name(const std::string&);

// True when the tuple, substituted into the claim's defining equations,
// actually violates the claim.
bool claim_violated(Claim c, std::span<const u64> tuple);

// Outcome of one bounded sweep. Counterexamples are re-verified on insert.
struct SearchReport {
    Claim claim;
    std::vector<std::pair<std::string, u64>> bounds;  // named, in order
    std::string counting;  // what one unit of `examined` means
    u64 examined = 0;
    std::vector<std::vector<u64>> counterexamples;
    std::chrono::milliseconds elapsed{0};

    // Rejects tuples that do not actually violate the claim.
    void add_counterexample(std::vector<u64> tuple);
};

// Each sweep partitions its outermost loop across `jobs` workers; the
// merged report is identical to the sequential one (elapsed aside).

// z^2 = x^4 + 4y^4 has no positive solutions; all 1 <= x, y <= max_xy.
SearchReport verify_prop1(u64 max_xy, unsigned jobs = 1);

// z^2 = w^2 + y^2, w^2 = y^2 + x^2 has no positive solutions; both leg
// orientations of every triple with hypotenuse w <= max_w.
SearchReport verify_prop2(u64 max_w, unsigned jobs = 1);

// No m > n with m^2 + n^2 and m^2 - n^2 both squares; n < m <= max_mn.
SearchReport verify_result3(u64 max_mn, unsigned jobs = 1);

// No triangle pair with largest leg = hypotenuse of the other and smallest
// leg shared; triples with c <= max_c. Also cross-checks witness agreement
// with verify_prop2 at the same bound.
SearchReport verify_theorem1(u64 max_c, unsigned jobs = 1);

// No box with a square face and an integral diagonal on an adjacent face;
// equal-edge boxes with q <= max_q.
SearchReport verify_theorem2(u64 max_q, unsigned jobs = 1);

// a^2 | b^2 implies a | b; all 1 <= a, b <= max_ab.
SearchReport verify_result1(u64 max_ab, unsigned jobs = 1);

// Coprime pairs with square product split into squares; ab <= max_prod.
SearchReport verify_result2(u64 max_prod, unsigned jobs = 1);

// Fault-injection sweep for the false NoTriples claim; every triple with
// c <= max_c is a counterexample.
SearchReport verify_no_triples(u64 max_c, unsigned jobs = 1);

}  // namespace pythia
