#pragma once

#include <compare>
#include <vector>

#include "pythia/core_arith.hpp"

namespace pythia {

// A positive solution of x^2 + 2y^2 = z^2.
struct TwoTwoSolution {
    u64 x, y, z;

    static TwoTwoSolution make(u64 x, u64 y, u64 z);

    auto operator<=>(const TwoTwoSolution&) const = default;

  private:
    TwoTwoSolution(u64 x_, u64 y_, u64 z_) : x(x_), y(y_), z(z_) {}
};

// Generator parameters (delta, k, lambda) with gcd(k, lambda) = 1.
// k^2 = 2*lambda^2 is impossible over the integers; asserted so x >= 1.
struct TwoTwoParams {
    u64 delta, k, lambda;

    static TwoTwoParams make(u64 delta, u64 k, u64 lambda);

    auto operator<=>(const TwoTwoParams&) const = default;

  private:
    TwoTwoParams(u64 d, u64 k_, u64 l) : delta(d), k(k_), lambda(l) {}
};

// (delta|k^2 - 2 lambda^2|, 2 delta k lambda, delta(k^2 + 2 lambda^2)).
TwoTwoSolution two_two_from_params(const TwoTwoParams& p);

// All solutions with z <= max_z, deduplicated and sorted by (z, x).
// odd_k_only restricts the generator to odd k; the emitted set is the same.
std::vector<TwoTwoSolution> enumerate_two_two(u64 max_z, bool odd_k_only,
                                              unsigned jobs = 1);

}  // namespace pythia
