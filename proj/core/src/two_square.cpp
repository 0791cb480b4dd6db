#include "pythia/two_square.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "pythia/parallel.hpp"

namespace pythia {

TwoTwoSolution TwoTwoSolution::make(u64 x, u64 y, u64 z) {
    if (x == 0 || y == 0 || z == 0)
        throw domain_error("TwoTwoSolution: components must be positive");
    if (checked_add(checked_sq(x), checked_mul(2, checked_sq(y))) !=
        checked_sq(z))
        throw domain_error("TwoTwoSolution: x^2 + 2y^2 != z^2");
    return TwoTwoSolution(x, y, z);
}

TwoTwoParams TwoTwoParams::make(u64 delta, u64 k, u64 lambda) {
    if (delta == 0 || k == 0 || lambda == 0)
        throw domain_error("TwoTwoParams: parameters must be positive");
    if (gcd(k, lambda) != 1)
        throw domain_error("TwoTwoParams: requires gcd(k, lambda) = 1");
    if (checked_sq(k) == checked_mul(2, checked_sq(lambda)))
        throw domain_error("TwoTwoParams: k^2 = 2 lambda^2 cannot happen");
    return TwoTwoParams(delta, k, lambda);
}

TwoTwoSolution two_two_from_params(const TwoTwoParams& p) {
    const u64 k2 = checked_sq(p.k);
    const u64 l2x2 = checked_mul(2, checked_sq(p.lambda));
    const u64 x = checked_mul(p.delta, k2 > l2x2 ? k2 - l2x2 : l2x2 - k2);
    const u64 y = checked_mul(p.delta, checked_mul(2, checked_mul(p.k, p.lambda)));
    const u64 z = checked_mul(p.delta, checked_add(k2, l2x2));
    return TwoTwoSolution::make(x, y, z);
}

std::vector<TwoTwoSolution> enumerate_two_two(u64 max_z, bool odd_k_only,
                                              unsigned jobs) {
    if (max_z == 0) throw domain_error("enumerate_two_two: max_z must be >= 1");
    checked_sq(max_z);

    // delta(k^2 + 2 lambda^2) <= max_z bounds k <= isqrt(max_z).
    const u64 k_hi = isqrt(max_z) + 1;
    auto scan = [&](u64 k_lo, u64 k_end) {
        std::vector<TwoTwoSolution> found;
        for (u64 k = std::max<u64>(1, k_lo); k < k_end; ++k) {
            if (odd_k_only && k % 2 == 0) continue;
            for (u64 lambda = 1; k * k + 2 * lambda * lambda <= max_z; ++lambda) {
                if (gcd(k, lambda) != 1) continue;
                const u64 z0 = k * k + 2 * lambda * lambda;
                for (u64 delta = 1; delta * z0 <= max_z; ++delta)
                    found.push_back(
                        two_two_from_params(TwoTwoParams::make(delta, k, lambda)));
            }
        }
        return found;
    };

    // Distinct parameters collide (even k duplicates odd-k solutions), so
    // dedup by value.
    std::set<TwoTwoSolution> dedup;
    for (auto& part :
         run_partitioned<std::vector<TwoTwoSolution>>(1, k_hi, jobs, scan))
        dedup.insert(part.begin(), part.end());

    std::vector<TwoTwoSolution> out(dedup.begin(), dedup.end());
    std::sort(out.begin(), out.end(),
              [](const TwoTwoSolution& a, const TwoTwoSolution& b) {
                  return std::tie(a.z, a.x) < std::tie(b.z, b.x);
              });
    return out;
}

}  // namespace pythia
