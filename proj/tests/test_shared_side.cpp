#include <doctest.h>

#include <vector>

#include "pythia/shared_side.hpp"

using namespace pythia;

namespace {

void check_pair(const TrianglePair& p) {
    REQUIRE(p.t1.a * p.t1.a + p.t1.b * p.t1.b == p.t1.c * p.t1.c);
    REQUIRE(p.t2.a * p.t2.a + p.t2.b * p.t2.b == p.t2.c * p.t2.c);
    REQUIRE(p.shared == p.t2.c);
    REQUIRE((p.shared == p.t1.a || p.shared == p.t1.b));
}

// Theorem 1 consequence: never largest leg of t1 = c2 with smallest leg of
// t1 matching a leg of t2.
void check_against_theorem1(const TrianglePair& p) {
    if (p.shared == p.t1.b) {
        REQUIRE(p.t1.a != p.t2.a);
        REQUIRE(p.t1.a != p.t2.b);
    }
}

}  // namespace

TEST_CASE("family1 examples") {
    auto p = family1(2, 1);
    CHECK(p.t1 == Triple::make(20, 21, 29));
    CHECK(p.t2 == Triple::make(12, 16, 20));
    CHECK(p.shared == 20);
    CHECK(p.mode == SharedMode::EvenLeg);

    p = family1(3, 2);
    CHECK(p.t1 == Triple::make(52, 165, 173));
    CHECK(p.t2 == Triple::make(20, 48, 52));
    CHECK(p.shared == 52);

    CHECK_THROWS_AS(family1(2, 2), domain_error);
}

TEST_CASE("family2 examples") {
    auto p = family2(1, 2, 1, 2, 1);
    CHECK(p.t1 == Triple::make(15, 20, 25));
    CHECK(p.t2 == Triple::make(12, 16, 20));
    CHECK(p.shared == 20);
    CHECK(p.mode == SharedMode::EvenLeg);

    p = family2(2, 2, 1, 2, 1);
    CHECK(p.t1 == Triple::make(30, 40, 50));
    CHECK(p.t2 == Triple::make(24, 32, 40));
    CHECK(p.shared == 40);

    CHECK_THROWS_AS(family2(1, 2, 2, 2, 1), domain_error);
    CHECK_THROWS_AS(family2(0, 2, 1, 2, 1), domain_error);
}

TEST_CASE("family3 examples") {
    auto p = family3(1, 2, 1, 2, 1);
    CHECK(p.t1 == Triple::make(15, 20, 25));
    CHECK(p.t2 == Triple::make(9, 12, 15));
    CHECK(p.shared == 15);
    CHECK(p.mode == SharedMode::OddLeg);

    p = family3(3, 2, 1, 2, 1);
    CHECK(p.shared == 45);

    // m = 3, n = 1 breaks the m + n odd condition.
    CHECK_THROWS_WITH_AS(family3(1, 3, 1, 2, 1), doctest::Contains("odd"),
                         domain_error);
}

TEST_CASE("family4 examples") {
    auto p = family4(7, 2, 1);
    CHECK(p.t1 == Triple::make(12, 35, 37));
    CHECK(p.t2 == Triple::make(21, 28, 35));
    CHECK(p.shared == 35);
    CHECK(p.mode == SharedMode::OddLeg);

    p = family4(9, 2, 1);
    CHECK(p.t1 == Triple::make(28, 45, 53));
    CHECK(p.t2 == Triple::make(27, 36, 45));
    CHECK(p.shared == 45);

    CHECK_THROWS_WITH_AS(family4(5, 2, 1), doctest::Contains("d > M"),
                         domain_error);
    CHECK_THROWS_WITH_AS(family4(8, 2, 1), doctest::Contains("odd"),
                         domain_error);
    CHECK_THROWS_WITH_AS(family4(15, 2, 1), doctest::Contains("gcd"),
                         domain_error);
}

TEST_CASE("family4 derived parameters over the full small domain") {
    for (u64 M = 2; M <= 6; ++M)
        for (u64 N = 1; N < M; ++N) {
            if ((M + N) % 2 == 0 || gcd(M, N) != 1) continue;
            const u64 S = M * M + N * N;
            for (u64 d = S + 2; d <= 99; d += 2) {
                if (gcd(d, S) != 1) continue;
                const auto p = family4(d, M, N);
                check_pair(p);
                // The derivation promises valid Eq-(1) parameters: m > n,
                // coprime, m + n odd. Recover them and assert.
                const u64 m = (d + S) / 2, n = (d - S) / 2;
                REQUIRE(m > n);
                REQUIRE(n >= 1);
                REQUIRE(gcd(m, n) == 1);
                REQUIRE((m + n) % 2 == 1);
            }
        }
}

TEST_CASE("all generated pairs respect the shared-side invariant") {
    std::vector<TrianglePair> pairs;
    for (u64 M = 2; M <= 8; ++M)
        for (u64 N = 1; N < M; ++N) {
            if ((M + N) % 2 == 0 || gcd(M, N) != 1) continue;
            pairs.push_back(family1(M, N));
            for (u64 K = 1; K <= 3; ++K) {
                pairs.push_back(family2(K, 3, 2, M, N));
                pairs.push_back(family3(K, 4, 1, M, N));
            }
            const u64 S = M * M + N * N;
            for (u64 d = S + 2; d <= S + 40; d += 2)
                if (gcd(d, S) == 1) pairs.push_back(family4(d, M, N));
        }
    for (const auto& p : pairs) {
        check_pair(p);
        check_against_theorem1(p);
    }
}
