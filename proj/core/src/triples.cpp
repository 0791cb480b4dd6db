#include "pythia/triples.hpp"

#include <algorithm>
#include <set>

#include "pythia/parallel.hpp"

namespace pythia {

Triple Triple::make(u64 a, u64 b, u64 c) {
    if (a == 0 || b == 0 || c == 0)
        throw domain_error("Triple: sides must be positive");
    if (a > b) std::swap(a, b);
    if (checked_add(checked_sq(a), checked_sq(b)) != checked_sq(c))
        throw domain_error("Triple: a^2 + b^2 != c^2");
    return Triple(a, b, c);
}

TripleParams TripleParams::make(u64 delta, u64 m, u64 n) {
    if (delta == 0) throw domain_error("TripleParams: delta must be positive");
    if (n == 0) throw domain_error("TripleParams: n must be >= 1");
    if (m <= n) throw domain_error("TripleParams: requires m > n");
    if (gcd(m, n) != 1) throw domain_error("TripleParams: requires gcd(m, n) = 1");
    if ((m + n) % 2 == 0)
        throw domain_error("TripleParams: requires m + n odd");
    return TripleParams(delta, m, n);
}

Triple triple_from_params(const TripleParams& p) {
    const u64 m2 = checked_sq(p.m);
    const u64 n2 = checked_sq(p.n);
    const u64 odd = checked_mul(p.delta, checked_sub(m2, n2));
    const u64 even = checked_mul(p.delta, checked_mul(2, checked_mul(p.m, p.n)));
    const u64 hyp = checked_mul(p.delta, checked_add(m2, n2));
    return Triple::make(odd, even, hyp);
}

bool is_primitive(const Triple& t) { return gcd(t.a, t.b) == 1; }

std::vector<Triple> enumerate_triples(u64 max_c, bool primitive_only,
                                      unsigned jobs) {
    if (max_c == 0) throw domain_error("enumerate_triples: max_c must be >= 1");
    checked_sq(max_c);  // reject widths that cannot represent max_c^2

    // m^2 + n^2 <= max_c bounds m; partition the m range across workers.
    const u64 m_hi = isqrt(max_c) + 1;
    auto scan = [&](u64 m_lo, u64 m_end) {
        std::vector<Triple> found;
        for (u64 m = std::max<u64>(2, m_lo); m < m_end; ++m) {
            for (u64 n = 1; n < m; ++n) {
                if ((m + n) % 2 == 0 || gcd(m, n) != 1) continue;
                const u64 c0 = m * m + n * n;
                if (c0 > max_c) break;
                const u64 reps = primitive_only ? 1 : max_c / c0;
                for (u64 delta = 1; delta <= reps; ++delta)
                    found.push_back(
                        triple_from_params(TripleParams::make(delta, m, n)));
            }
        }
        return found;
    };

    std::set<Triple> dedup;
    for (auto& part : run_partitioned<std::vector<Triple>>(2, m_hi, jobs, scan))
        dedup.insert(part.begin(), part.end());

    std::vector<Triple> out(dedup.begin(), dedup.end());
    std::sort(out.begin(), out.end(), [](const Triple& x, const Triple& y) {
        return std::tie(x.c, x.a) < std::tie(y.c, y.a);
    });
    return out;
}

TripleDecomposition params_of(const Triple& t) {
    // make() revalidates; callers may hand us a struct from elsewhere.
    const Triple v = Triple::make(t.a, t.b, t.c);
    const u64 delta = gcd(gcd(v.a, v.b), v.c);
    const u64 pa = v.a / delta, pb = v.b / delta, pc = v.c / delta;
    // Exactly one leg of a primitive triple is odd.
    const bool a_odd = pa % 2 == 1;
    const u64 odd = a_odd ? pa : pb;
    const u64 even = a_odd ? pb : pa;
    if (odd % 2 == 0 || even % 2 == 1)
        throw domain_error("params_of: primitive part lacks an odd/even leg split");
    const u64 m = isqrt((pc + odd) / 2);
    const u64 n = isqrt((pc - odd) / 2);
    if (n == 0 || m * m + n * n != pc || m * m - n * n != odd ||
        2 * m * n != even)
        throw domain_error("params_of: decomposition failed");
    TripleDecomposition d{TripleParams::make(delta, m, n),
                          /*leg_swap=*/even < odd};
    if (triple_from_params(d.params) != v)
        throw domain_error("params_of: round-trip check failed");
    return d;
}

}  // namespace pythia
