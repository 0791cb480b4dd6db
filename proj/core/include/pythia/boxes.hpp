#pragma once

#include <compare>
#include <vector>

#include "pythia/core_arith.hpp"

namespace pythia {

// A box with integer edges x, y, z and integer inner diagonal t:
// t^2 = x^2 + y^2 + z^2. Edge order is preserved as given; enumeration
// returns edges sorted ascending.
struct Box {
    u64 x, y, z, t;

    static Box make(u64 x, u64 y, u64 z, u64 t);

    auto operator<=>(const Box&) const = default;

  private:
    Box(u64 x_, u64 y_, u64 z_, u64 t_) : x(x_), y(y_), z(z_), t(t_) {}
};

// Parameters (v, ell, n): n divides ell^2 + v^2 and n^2 < ell^2 + v^2.
struct BoxParams {
    u64 v, ell, n;

    static BoxParams make(u64 v, u64 ell, u64 n);

    auto operator<=>(const BoxParams&) const = default;

  private:
    BoxParams(u64 v_, u64 e, u64 n_) : v(v_), ell(e), n(n_) {}
};

// Parameters (delta, m, k): m > k >= 1, gcd(m, k) = 1, m + k odd. Feed the
// integral-face-diagonal subfamily.
struct FaceDiagonalParams {
    u64 delta, m, k;

    static FaceDiagonalParams make(u64 delta, u64 m, u64 k);

    auto operator<=>(const FaceDiagonalParams&) const = default;

  private:
    FaceDiagonalParams(u64 d, u64 m_, u64 k_) : delta(d), m(m_), k(k_) {}
};

// (2v, 2ell, (ell^2+v^2-n^2)/n, (ell^2+v^2+n^2)/n); both divisions exact.
Box box_from_params(const BoxParams& p);

// All boxes with t <= max_t, edges sorted ascending, list sorted by
// (t, x, y). Covers every solution up to permutation of the edges.
std::vector<Box> enumerate_boxes(u64 max_t, unsigned jobs = 1);

struct FaceDiagonalBox {
    Box box;
    u64 d;  // diagonal of the x-y face: x^2 + y^2 = d^2
};

// The n = 1 subfamily with (v, ell) drawn from a Pythagorean pair, so the
// x-y face diagonal d is integral.
FaceDiagonalBox face_diagonal_box(const FaceDiagonalParams& p);

// All boxes with two equal adjacent edges and t <= max_t, obtained from the
// solutions of x^2 + 2y^2 = z^2.
std::vector<Box> equal_edge_boxes(u64 max_t, unsigned jobs = 1);

}  // namespace pythia
