#include <doctest.h>

#include "pythia/core_arith.hpp"

using namespace pythia;

TEST_CASE("gcd basics") {
    CHECK(gcd(5, 0) == 5);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(12, 8) == 4);
    CHECK(gcd(7, 5) == 1);
    CHECK_THROWS_AS(gcd(0, 0), domain_error);
}

TEST_CASE("isqrt examples") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(99) == 9);
    CHECK(isqrt(100) == 10);
    CHECK(isqrt(u64{1} << 62) == (u64{1} << 31));
}

TEST_CASE("isqrt invariant up to 10^6") {
    for (u64 n = 0; n <= 1000000; ++n) {
        const u64 r = isqrt(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("isqrt near 64-bit perfect-square seams") {
    for (u64 r : {u64{3037000499}, u64{4294967295}, u64{1} << 31}) {
        const u64 sq = r * r;
        CHECK(isqrt(sq) == r);
        CHECK(isqrt(sq - 1) == r - 1);
    }
}

TEST_CASE("is_perfect_square") {
    CHECK(is_perfect_square(1));
    CHECK(is_perfect_square(121));
    CHECK_FALSE(is_perfect_square(120));
    CHECK(is_perfect_square(0));
}

TEST_CASE("coprime_square_split examples") {
    CHECK(coprime_square_split(1, 1) == std::pair<u64, u64>{1, 1});
    CHECK(coprime_square_split(9, 16) == std::pair<u64, u64>{3, 4});
    CHECK(coprime_square_split(25, 4) == std::pair<u64, u64>{5, 2});
}

TEST_CASE("coprime_square_split error paths are distinct") {
    CHECK_THROWS_WITH_AS(coprime_square_split(2, 8),
                         doctest::Contains("not coprime"), domain_error);
    CHECK_THROWS_WITH_AS(coprime_square_split(2, 3),
                         doctest::Contains("not a perfect square"),
                         domain_error);
    CHECK_THROWS_AS(coprime_square_split(0, 3), domain_error);
}

TEST_CASE("square split property over coprime factorizations of c^2") {
    // Every coprime split of a square product must round-trip.
    for (u64 c = 1; c <= 1000; ++c) {
        const u64 prod = c * c;
        for (u64 a = 1; a <= c; ++a) {
            if (prod % a != 0) continue;
            const u64 b = prod / a;
            if (gcd(a, b) != 1) continue;
            const auto [ra, rb] = coprime_square_split(a, b);
            REQUIRE(ra * ra == a);
            REQUIRE(rb * rb == b);
            REQUIRE(gcd(ra, rb) == 1);
            REQUIRE(ra * rb == isqrt(prod));
        }
    }
}

TEST_CASE("divisibility of squares implies divisibility (desk sweep)") {
    for (u64 a = 1; a <= 500; ++a)
        for (u64 b = 1; b <= 500; ++b)
            if ((b * b) % (a * a) == 0) REQUIRE(b % a == 0);
}

TEST_CASE("fourth powers near the width limit overflow detectably") {
    CHECK(checked_pow4(65535) == 65535ull * 65535 * 65535 * 65535);
    CHECK_THROWS_AS(checked_pow4(u64{1} << 16), overflow_error);
    CHECK_THROWS_AS(checked_pow4(u64{1} << 33), overflow_error);

    WidthGuard narrow(32);
    CHECK_THROWS_AS(checked_pow4(4000), overflow_error);
    CHECK(checked_pow4(255) == 255ull * 255 * 255 * 255);
}

TEST_CASE("checked arithmetic never wraps") {
    CHECK_THROWS_AS(checked_add(~u64{0}, 1), overflow_error);
    CHECK_THROWS_AS(checked_mul(u64{1} << 32, u64{1} << 32), overflow_error);
    CHECK_THROWS_AS(checked_sub(3, 5), domain_error);
    WidthGuard narrow(16);
    CHECK_THROWS_AS(checked_add(65535, 1), overflow_error);
    CHECK(checked_mul(255, 255) == 65025);
}
