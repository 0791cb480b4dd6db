#pragma once

#include <compare>
#include <vector>

#include "pythia/core_arith.hpp"

namespace pythia {

// A Pythagorean triple a^2 + b^2 = c^2, stored with legs in canonical
// ascending order a <= b.
struct Triple {
    u64 a, b, c;

    // Validates positivity and the Pythagorean relation; legs may be given
    // in either order.
    static Triple make(u64 a, u64 b, u64 c);

    auto operator<=>(const Triple&) const = default;

  private:
    Triple(u64 a_, u64 b_, u64 c_) : a(a_), b(b_), c(c_) {}
};

// Generator parameters (delta, m, n): m > n >= 1, gcd(m, n) = 1, m + n odd.
struct TripleParams {
    u64 delta, m, n;

    static TripleParams make(u64 delta, u64 m, u64 n);

    auto operator<=>(const TripleParams&) const = default;

  private:
    TripleParams(u64 d, u64 m_, u64 n_) : delta(d), m(m_), n(n_) {}
};

// (delta(m^2 - n^2), delta(2mn), delta(m^2 + n^2)), canonically ordered.
Triple triple_from_params(const TripleParams& p);

// gcd(a, b) == 1; equivalent to all three pairwise gcds being 1.
bool is_primitive(const Triple& t);

// All canonical triples with c <= max_c, sorted by (c, a). jobs > 1
// partitions the generator range; the merged output is identical to the
// sequential one.
std::vector<Triple> enumerate_triples(u64 max_c, bool primitive_only,
                                      unsigned jobs = 1);

struct TripleDecomposition {
    TripleParams params;
    // True when the even leg delta*2mn is the smaller of the two legs,
    // i.e. the stored (a, b) realizes the swapped-leg form.
    bool leg_swap;
};

// Canonical inverse of triple_from_params: delta = gcd(a, b, c), then the
// unique (m, n) of the primitive part. Round-trips exactly.
TripleDecomposition params_of(const Triple& t);

}  // namespace pythia
