#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sqr/sequences.hpp"

using namespace sqr;

namespace {

// Three overlapping rectangles with x-sequence 1,2,3,1,2,3 and
// y-sequence 2,3,1,2,1,3.
Arrangement staircase3() {
    return Arrangement({make_rect(0, 6, 5, 9), make_rect(2, 8, 1, 7), make_rect(4, 10, 3, 11)});
}

}  // namespace

TEST_CASE("staircase sequences") {
    Arrangement arr = staircase3();
    AxisSequence xs = axis_sequence(arr, Axis::X);
    AxisSequence ys = axis_sequence(arr, Axis::Y);
    CHECK(xs.entries == std::vector<int>{0, 1, 2, 0, 1, 2});
    CHECK(ys.entries == std::vector<int>{1, 2, 0, 1, 0, 2});
    CHECK(xs.pairs[0] == std::pair<int, int>{1, 4});
    CHECK(ys.pairs[0] == std::pair<int, int>{3, 5});
}

TEST_CASE("single rectangle sequence") {
    Arrangement arr({make_rect(0, 1, 0, 1)});
    AxisSequence s = axis_sequence(arr, Axis::X);
    CHECK(s.entries == std::vector<int>{0, 0});
    CHECK(s.pairs[0] == std::pair<int, int>{1, 2});
}

TEST_CASE("ties are refused, not perturbed") {
    Arrangement arr({make_rect(0, 2, 0, 1), make_rect(2, 4, 5, 6)});
    CHECK_THROWS_AS(axis_sequence(arr, Axis::X), GeneralPositionViolation);
    CHECK_NOTHROW(axis_sequence(arr, Axis::Y));
}

TEST_CASE("sequences_equal compares entry lists") {
    AxisSequence a, b;
    a.entries = {0, 1, 0, 1};
    b.entries = {0, 1, 1, 0};
    CHECK(sequences_equal(a, a));
    CHECK_FALSE(sequences_equal(a, b));
}

TEST_CASE("axis_sequence is invariant under positive affine maps") {
    std::mt19937 rng(31337);
    for (int t = 0; t < 200; ++t) {
        Arrangement arr = sqr::testing::random_arrangement(rng, 5, 60);
        Arrangement img = sqr::testing::affine_copy(arr, Rational(3), Rational(-17),
                                                    Rational(7, 2), Rational(5));
        CHECK(sequences_equal(axis_sequence(arr, Axis::X), axis_sequence(img, Axis::X)));
        CHECK(sequences_equal(axis_sequence(arr, Axis::Y), axis_sequence(img, Axis::Y)));
    }
}

TEST_CASE("entries between a rectangle's positions are the endpoints inside it") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 200; ++t) {
        Arrangement arr = sqr::testing::random_arrangement(rng, 5, 60);
        AxisSequence s = axis_sequence(arr, Axis::X);
        for (int i = 0; i < arr.size(); ++i) {
            auto [j1, j2] = s.pairs[static_cast<std::size_t>(i)];
            int inside = 0;
            for (int j = 0; j < arr.size(); ++j) {
                if (j == i)
                    continue;
                const Interval& other = arr.boxes[static_cast<std::size_t>(j)].x();
                const Interval& mine = arr.boxes[static_cast<std::size_t>(i)].x();
                inside += (other.lo > mine.lo && other.lo < mine.hi);
                inside += (other.hi > mine.lo && other.hi < mine.hi);
            }
            CHECK(j2 - j1 - 1 == inside);
        }
    }
}

TEST_CASE("position nesting corresponds to the Inside relation") {
    std::mt19937 rng(555);
    for (int t = 0; t < 200; ++t) {
        Arrangement arr = sqr::testing::random_arrangement(rng, 4, 40);
        AxisSequence s = axis_sequence(arr, Axis::X);
        for (int i = 0; i < arr.size(); ++i)
            for (int j = 0; j < arr.size(); ++j) {
                if (i == j)
                    continue;
                auto [a1, a2] = s.pairs[static_cast<std::size_t>(i)];
                auto [b1, b2] = s.pairs[static_cast<std::size_t>(j)];
                const bool nested = b1 < a1 && a2 < b2;
                const bool inside = interval_relation(arr.boxes[static_cast<std::size_t>(i)].x(),
                                                      arr.boxes[static_cast<std::size_t>(j)].x()) ==
                                    IntervalRelation::Inside;
                CHECK(nested == inside);
            }
    }
}
