#include "pythia/boxes.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include "pythia/parallel.hpp"
#include "pythia/two_square.hpp"

namespace pythia {

Box Box::make(u64 x, u64 y, u64 z, u64 t) {
    if (x == 0 || y == 0 || z == 0 || t == 0)
        throw domain_error("Box: dimensions must be positive");
    const u64 s =
        checked_add(checked_add(checked_sq(x), checked_sq(y)), checked_sq(z));
    if (s != checked_sq(t)) throw domain_error("Box: t^2 != x^2 + y^2 + z^2");
    return Box(x, y, z, t);
}

BoxParams BoxParams::make(u64 v, u64 ell, u64 n) {
    if (v == 0 || ell == 0 || n == 0)
        throw domain_error("BoxParams: parameters must be positive");
    const u64 s = checked_add(checked_sq(v), checked_sq(ell));
    if (s % n != 0)
        throw domain_error("BoxParams: n must divide ell^2 + v^2");
    if (checked_sq(n) >= s)
        throw domain_error("BoxParams: requires n^2 < ell^2 + v^2");
    return BoxParams(v, ell, n);
}

FaceDiagonalParams FaceDiagonalParams::make(u64 delta, u64 m, u64 k) {
    if (delta == 0) throw domain_error("FaceDiagonalParams: delta must be positive");
    if (k == 0) throw domain_error("FaceDiagonalParams: k must be >= 1");
    if (m <= k) throw domain_error("FaceDiagonalParams: requires m > k");
    if (gcd(m, k) != 1)
        throw domain_error("FaceDiagonalParams: requires gcd(m, k) = 1");
    if ((m + k) % 2 == 0)
        throw domain_error("FaceDiagonalParams: requires m + k odd");
    return FaceDiagonalParams(delta, m, k);
}

Box box_from_params(const BoxParams& p) {
    const u64 s = checked_add(checked_sq(p.v), checked_sq(p.ell));
    const u64 n2 = checked_sq(p.n);
    return Box::make(checked_mul(2, p.v), checked_mul(2, p.ell),
                     checked_sub(s, n2) / p.n, checked_add(s, n2) / p.n);
}

namespace {

Box edge_sorted(const Box& b) {
    std::array<u64, 3> e{b.x, b.y, b.z};
    std::sort(e.begin(), e.end());
    return Box::make(e[0], e[1], e[2], b.t);
}

bool box_order(const Box& a, const Box& b) {
    return std::tie(a.t, a.x, a.y) < std::tie(b.t, b.x, b.y);
}

}  // namespace

std::vector<Box> enumerate_boxes(u64 max_t, unsigned jobs) {
    if (max_t < 3) throw domain_error("enumerate_boxes: max_t must be >= 3");
    checked_sq(max_t);

    // For divisors n < sqrt(s), t = s/n + n >= 2 sqrt(s) >= 2 ell, so
    // ell <= max_t / 2. v <= ell by symmetry of (14a) in (v, ell).
    const u64 ell_hi = max_t / 2 + 1;
    auto scan = [&](u64 ell_lo, u64 ell_end) {
        std::vector<Box> found;
        for (u64 ell = std::max<u64>(1, ell_lo); ell < ell_end; ++ell) {
            for (u64 v = 1; v <= ell; ++v) {
                const u64 s = ell * ell + v * v;
                const u64 r = isqrt(s);
                for (u64 n = 1; n <= r; ++n) {
                    if (s % n != 0 || n * n >= s) continue;
                    const u64 t = s / n + n;
                    if (t > max_t) continue;
                    found.push_back(edge_sorted(
                        box_from_params(BoxParams::make(v, ell, n))));
                }
            }
        }
        return found;
    };

    std::set<Box> dedup;
    for (auto& part : run_partitioned<std::vector<Box>>(1, ell_hi, jobs, scan))
        dedup.insert(part.begin(), part.end());

    std::vector<Box> out(dedup.begin(), dedup.end());
    std::sort(out.begin(), out.end(), box_order);
    return out;
}

FaceDiagonalBox face_diagonal_box(const FaceDiagonalParams& p) {
    const u64 m2 = checked_sq(p.m);
    const u64 k2 = checked_sq(p.k);
    const u64 v = checked_mul(p.delta, checked_sub(m2, k2));
    const u64 ell = checked_mul(p.delta, checked_mul(2, checked_mul(p.m, p.k)));
    const u64 d = checked_mul(2, checked_mul(p.delta, checked_add(m2, k2)));
    const u64 s = checked_add(checked_sq(v), checked_sq(ell));
    Box box = Box::make(checked_mul(2, v), checked_mul(2, ell),
                        checked_sub(s, 1), checked_add(s, 1));
    // (m^2-k^2)^2 + (2mk)^2 = (m^2+k^2)^2, so x^2 + y^2 = d^2 for every delta.
    if (checked_add(checked_sq(box.x), checked_sq(box.y)) != checked_sq(d))
        throw domain_error("face_diagonal_box: face diagonal check failed");
    return {box, d};
}

std::vector<Box> equal_edge_boxes(u64 max_t, unsigned jobs) {
    if (max_t < 3)
        throw domain_error("equal_edge_boxes: max_t must be >= 3");
    std::vector<Box> out;
    // t^2 = z^2 + 2x^2 is x^2 + 2y^2 = z^2 with (x, y, z) -> (z, x, t).
    for (const auto& s : enumerate_two_two(max_t, false, jobs))
        out.push_back(Box::make(s.y, s.y, s.x, s.z));
    std::sort(out.begin(), out.end(), box_order);
    return out;
}

}  // namespace pythia
