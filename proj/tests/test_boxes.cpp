#include <doctest.h>

#include <array>
#include <set>

#include "oracles.hpp"
#include "pythia/boxes.hpp"

using namespace pythia;

namespace {
std::array<u64, 4> sorted_edges(const Box& b) {
    std::array<u64, 3> e{b.x, b.y, b.z};
    std::sort(e.begin(), e.end());
    return {e[0], e[1], e[2], b.t};
}
}  // namespace

TEST_CASE("box_from_params examples") {
    CHECK(box_from_params(BoxParams::make(1, 1, 1)) == Box::make(2, 2, 1, 3));
    CHECK(box_from_params(BoxParams::make(1, 2, 1)) == Box::make(2, 4, 4, 6));
    // 13 divides 13 = ell^2 + v^2 but 13^2 is too large.
    CHECK_THROWS_WITH_AS(BoxParams::make(2, 3, 13),
                         doctest::Contains("n^2"), domain_error);
    CHECK_THROWS_WITH_AS(BoxParams::make(1, 1, 1000),
                         doctest::Contains("divide"), domain_error);
    // n divides but n^2 >= ell^2 + v^2.
    CHECK_THROWS_WITH_AS(BoxParams::make(1, 2, 5),
                         doctest::Contains("n^2"), domain_error);
}

TEST_CASE("both divisions in the box formulas are exact") {
    for (u64 ell = 1; ell <= 30; ++ell)
        for (u64 v = 1; v <= ell; ++v) {
            const u64 s = ell * ell + v * v;
            for (u64 n = 1; n * n < s; ++n) {
                if (s % n != 0) continue;
                REQUIRE((s - n * n) % n == 0);
                REQUIRE((s + n * n) % n == 0);
                const Box b = box_from_params(BoxParams::make(v, ell, n));
                REQUIRE(b.x * b.x + b.y * b.y + b.z * b.z == b.t * b.t);
            }
        }
}

TEST_CASE("enumerate_boxes examples") {
    const auto small = enumerate_boxes(3);
    REQUIRE(small.size() == 1);
    CHECK(small[0] == Box::make(1, 2, 2, 3));
    CHECK_THROWS_AS(enumerate_boxes(2), domain_error);

    const auto nine = enumerate_boxes(9);
    std::set<Box> got(nine.begin(), nine.end());
    CHECK(got.count(Box::make(1, 4, 8, 9)) == 1);
    CHECK(got.count(Box::make(4, 4, 7, 9)) == 1);
}

TEST_CASE("completeness modulo permutation at 100") {
    const auto got = enumerate_boxes(100);
    std::set<std::array<u64, 4>> got_set;
    for (const auto& b : got) got_set.insert(sorted_edges(b));
    REQUIRE(got_set.size() == got.size());

    const auto want = oracle::boxes(100);
    REQUIRE(want.size() == got.size());
    for (const auto& w : want) REQUIRE(got_set.count(w) == 1);
}

TEST_CASE("face_diagonal_box examples") {
    auto fb = face_diagonal_box(FaceDiagonalParams::make(1, 2, 1));
    CHECK(fb.box == Box::make(6, 8, 24, 26));
    CHECK(fb.d == 10);

    fb = face_diagonal_box(FaceDiagonalParams::make(1, 3, 2));
    CHECK(fb.box == Box::make(10, 24, 168, 170));
    CHECK(fb.d == 26);

    // delta scales v and ell; d = 2*delta*(m^2+k^2) stays consistent because
    // (m^2-k^2)^2 + (2mk)^2 = (m^2+k^2)^2.
    fb = face_diagonal_box(FaceDiagonalParams::make(2, 2, 1));
    CHECK(fb.box == Box::make(12, 16, 99, 101));
    CHECK(fb.d == 20);
    CHECK(fb.box.x * fb.box.x + fb.box.y * fb.box.y == fb.d * fb.d);
}

TEST_CASE("face-diagonal family invariants over a parameter grid") {
    for (u64 delta = 1; delta <= 4; ++delta)
        for (u64 m = 2; m <= 12; ++m)
            for (u64 k = 1; k < m; ++k) {
                if ((m + k) % 2 == 0 || gcd(m, k) != 1) continue;
                const auto fb =
                    face_diagonal_box(FaceDiagonalParams::make(delta, m, k));
                REQUIRE(fb.box.x * fb.box.x + fb.box.y * fb.box.y ==
                        fb.d * fb.d);
                REQUIRE(fb.box.x * fb.box.x + fb.box.y * fb.box.y +
                            fb.box.z * fb.box.z ==
                        fb.box.t * fb.box.t);
            }
}

TEST_CASE("face-diagonal parameter validation") {
    CHECK_THROWS_AS(FaceDiagonalParams::make(1, 2, 2), domain_error);
    CHECK_THROWS_AS(FaceDiagonalParams::make(1, 3, 1), domain_error);
    CHECK_THROWS_AS(FaceDiagonalParams::make(0, 2, 1), domain_error);
}

TEST_CASE("equal_edge_boxes examples") {
    const auto three = equal_edge_boxes(3);
    REQUIRE(three.size() == 1);
    CHECK(three[0] == Box::make(2, 2, 1, 3));

    const auto nine = equal_edge_boxes(9);
    std::set<Box> got(nine.begin(), nine.end());
    CHECK(got.count(Box::make(4, 4, 7, 9)) == 1);
    CHECK_THROWS_AS(equal_edge_boxes(2), domain_error);
}

TEST_CASE("equal_edge_boxes matches brute force at 500") {
    const auto got = equal_edge_boxes(500);
    const auto want = oracle::equal_edge_boxes(500);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].x == want[i][0]);
        CHECK(got[i].y == want[i][1]);
        CHECK(got[i].z == want[i][2]);
        CHECK(got[i].t == want[i][3]);
    }
}

TEST_CASE("partitioned enumeration equals sequential") {
    CHECK(enumerate_boxes(100, 4) == enumerate_boxes(100));
    CHECK(equal_edge_boxes(300, 4) == equal_edge_boxes(300));
}
