#ifndef SQR_TEST_HELPERS_HPP
#define SQR_TEST_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sqr/geometry.hpp"
#include "sqr/validators.hpp"

namespace sqr::testing {

// Random general-position arrangement on an integer grid: 2n distinct values
// per axis, matched into intervals at random. Produces the full mix of
// relations (nesting, overlap, disjointness).
inline Arrangement random_arrangement(std::mt19937& rng, int n, int grid) {
    auto axis_intervals = [&] {
        std::vector<int> values(static_cast<std::size_t>(grid));
        std::iota(values.begin(), values.end(), 0);
        std::shuffle(values.begin(), values.end(), rng);
        values.resize(static_cast<std::size_t>(2 * n));
        std::shuffle(values.begin(), values.end(), rng);
        std::vector<Interval> out;
        for (int i = 0; i < n; ++i) {
            int a = values[static_cast<std::size_t>(2 * i)];
            int b = values[static_cast<std::size_t>(2 * i + 1)];
            if (a > b)
                std::swap(a, b);
            out.emplace_back(Rational(a), Rational(b));
        }
        return out;
    };
    std::vector<Interval> xs = axis_intervals();
    std::vector<Interval> ys = axis_intervals();
    std::vector<BoxD> boxes;
    for (int i = 0; i < n; ++i)
        boxes.push_back(BoxD({xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]}));
    return Arrangement(std::move(boxes));
}

// Random general-position arrangement of axis-aligned squares.
inline Arrangement random_squares(std::mt19937& rng, int n, int grid) {
    for (;;) {
        std::uniform_int_distribution<int> pos(0, grid);
        std::uniform_int_distribution<int> len(1, grid / 2 + 1);
        std::vector<BoxD> boxes;
        for (int i = 0; i < n; ++i) {
            const int side = len(rng);
            const int x = pos(rng);
            const int y = pos(rng);
            boxes.push_back(make_rect(Rational(x), Rational(x + side),
                                      Rational(y), Rational(y + side)));
        }
        Arrangement arr(std::move(boxes));
        if (validate_general_position(arr).ok())
            return arr;
    }
}

inline Arrangement random_admissible(std::mt19937& rng, int n, int grid) {
    for (;;) {
        Arrangement arr = random_arrangement(rng, n, grid);
        if (check_admissible_input(arr).ok())
            return arr;
    }
}

// Positive affine image x -> x*scale + shift per axis; preserves sequences.
inline Arrangement affine_copy(const Arrangement& arr, const Rational& sx, const Rational& dx,
                               const Rational& sy, const Rational& dy) {
    std::vector<BoxD> boxes;
    for (const BoxD& b : arr.boxes)
        boxes.push_back(make_rect(b.x().lo * sx + dx, b.x().hi * sx + dx,
                                  b.y().lo * sy + dy, b.y().hi * sy + dy));
    return Arrangement(std::move(boxes), arr.labels);
}

}  // namespace sqr::testing

#endif
