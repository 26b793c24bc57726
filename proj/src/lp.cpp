#include "sqr/lp.hpp"

#include <algorithm>

#include "sqr/validators.hpp"

namespace sqr {

LinearSystem build_lp(const Arrangement& arr) {
    if (arr.dimension != 2)
        throw DimensionMismatch("the squarability LP is defined for d = 2");
    if (arr.size() < 1)
        throw SizeMismatch("empty arrangement");
    LinearSystem sys;
    sys.num_rects = arr.size();
    sys.num_vars = 4 * arr.size() - 2;
    sys.xseq = axis_sequence(arr, Axis::X);
    sys.yseq = axis_sequence(arr, Axis::Y);
    const int xcount = 2 * arr.size() - 1;  // x_1..x_{2n-1}
    sys.equalities.assign(static_cast<std::size_t>(sys.num_rects),
                          std::vector<Rational>(static_cast<std::size_t>(sys.num_vars), Rational(0)));
    for (int i = 0; i < sys.num_rects; ++i) {
        auto [j1, j2] = sys.xseq.pairs[static_cast<std::size_t>(i)];
        for (int k = j1; k <= j2 - 1; ++k)
            sys.equalities[i][static_cast<std::size_t>(k - 1)] = 1;
        auto [j1y, j2y] = sys.yseq.pairs[static_cast<std::size_t>(i)];
        for (int k = j1y; k <= j2y - 1; ++k)
            sys.equalities[i][static_cast<std::size_t>(xcount + k - 1)] = -1;
    }
    return sys;
}

namespace {

// Phase-one simplex with Bland's rule on the shifted system
//   A u = b, u >= 0   where u = v - 1 and b_i = -sum_j A[i][j].
// Returns the feasible v, or nothing.
std::optional<std::vector<Rational>> phase_one(const LinearSystem& sys) {
    const int m = sys.num_rects;
    const int n = sys.num_vars;
    const int cols = n + m + 1;  // structural + artificial + rhs
    const int rhs = n + m;

    std::vector<std::vector<Rational>> t(static_cast<std::size_t>(m + 1),
                                         std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)));
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Rational b = 0;
        for (int j = 0; j < n; ++j)
            b -= sys.equalities[i][static_cast<std::size_t>(j)];
        const bool flip = b < 0;
        for (int j = 0; j < n; ++j) {
            const Rational& a = sys.equalities[i][static_cast<std::size_t>(j)];
            t[i][static_cast<std::size_t>(j)] = flip ? -a : a;
        }
        t[i][static_cast<std::size_t>(rhs)] = flip ? -b : b;
        t[i][static_cast<std::size_t>(n + i)] = 1;
        basis[static_cast<std::size_t>(i)] = n + i;
    }
    // Objective row: w = sum of artificials, expressed over nonbasic columns.
    auto& obj = t[static_cast<std::size_t>(m)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= rhs; ++j)
            if (j < n || j == rhs)
                obj[static_cast<std::size_t>(j)] += t[i][static_cast<std::size_t>(j)];

    for (;;) {
        // Bland: lowest-index column that can decrease w.
        int pivot_col = -1;
        for (int j = 0; j < n + m; ++j)
            if (obj[static_cast<std::size_t>(j)] > 0) { pivot_col = j; break; }
        if (pivot_col < 0)
            break;
        int pivot_row = -1;
        Rational best_ratio = 0;
        for (int i = 0; i < m; ++i) {
            const Rational& a = t[i][static_cast<std::size_t>(pivot_col)];
            if (a <= 0)
                continue;
            Rational ratio = t[i][static_cast<std::size_t>(rhs)] / a;
            if (pivot_row < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(i)] <
                                            basis[static_cast<std::size_t>(pivot_row)])) {
                pivot_row = i;
                best_ratio = ratio;
            }
        }
        if (pivot_row < 0)
            break;  // w unbounded below cannot happen (w >= 0); defensive exit
        auto& prow = t[static_cast<std::size_t>(pivot_row)];
        const Rational p = prow[static_cast<std::size_t>(pivot_col)];
        for (auto& cell : prow)
            cell /= p;
        for (int i = 0; i <= m; ++i) {
            if (i == pivot_row)
                continue;
            auto& row = t[static_cast<std::size_t>(i)];
            const Rational f = row[static_cast<std::size_t>(pivot_col)];
            if (f == 0)
                continue;
            for (int j = 0; j < cols; ++j)
                if (prow[static_cast<std::size_t>(j)] != 0)
                    row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        }
        basis[static_cast<std::size_t>(pivot_row)] = pivot_col;
    }

    if (obj[static_cast<std::size_t>(rhs)] != 0)
        return std::nullopt;

    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(1));
    for (int i = 0; i < m; ++i)
        if (basis[static_cast<std::size_t>(i)] < n)
            v[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] +=
                t[i][static_cast<std::size_t>(rhs)];
    return v;
}

Arrangement squares_from_assignment(const LinearSystem& sys,
                                    const std::vector<Rational>& assignment,
                                    const std::vector<std::string>& labels) {
    const int n = sys.num_rects;
    const int xcount = 2 * n - 1;
    // prefix[j] = sum of the first j gap variables on an axis
    std::vector<Rational> px(static_cast<std::size_t>(2 * n), Rational(0));
    std::vector<Rational> py(static_cast<std::size_t>(2 * n), Rational(0));
    for (int k = 1; k <= xcount; ++k) {
        px[static_cast<std::size_t>(k)] = px[static_cast<std::size_t>(k - 1)] +
                                          assignment[static_cast<std::size_t>(k - 1)];
        py[static_cast<std::size_t>(k)] = py[static_cast<std::size_t>(k - 1)] +
                                          assignment[static_cast<std::size_t>(xcount + k - 1)];
    }
    std::vector<BoxD> boxes;
    boxes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto [j1, j2] = sys.xseq.pairs[static_cast<std::size_t>(i)];
        auto [j1y, j2y] = sys.yseq.pairs[static_cast<std::size_t>(i)];
        boxes.push_back(make_rect(px[static_cast<std::size_t>(j1 - 1)],
                                  px[static_cast<std::size_t>(j2 - 1)],
                                  py[static_cast<std::size_t>(j1y - 1)],
                                  py[static_cast<std::size_t>(j2y - 1)]));
    }
    return Arrangement(std::move(boxes), labels);
}

}  // namespace

Verdict solve_feasibility(const LinearSystem& sys, const std::vector<std::string>& labels) {
    auto assignment = phase_one(sys);
    if (!assignment)
        return {};
    Witness w;
    w.assignment = std::move(*assignment);
    w.squares = squares_from_assignment(sys, w.assignment, labels);
    return {std::move(w)};
}

Arrangement reconstruct_squares(const LinearSystem& sys,
                                const std::vector<Rational>& assignment,
                                const Arrangement& arr) {
    if (static_cast<int>(assignment.size()) != sys.num_vars)
        throw InfeasibleAssignment("assignment has wrong arity");
    for (const Rational& v : assignment)
        if (v < sys.lower_bound)
            throw InfeasibleAssignment("assignment violates a lower bound");
    for (const auto& row : sys.equalities) {
        Rational acc = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            acc += row[j] * assignment[j];
        if (acc != 0)
            throw InfeasibleAssignment("assignment violates an equality");
    }
    Arrangement squares = squares_from_assignment(sys, assignment, arr.labels);
    if (!check_is_squares(squares) || !check_order_preserved(arr, squares))
        throw InfeasibleAssignment("reconstruction failed its own contract");
    return squares;
}

std::vector<Rational> normalize_blowup(const std::vector<Rational>& values) {
    if (values.empty())
        return values;
    Rational min = values.front();
    for (const Rational& v : values) {
        if (v <= 0)
            throw NonPositiveValue("blow-up needs strictly positive values");
        if (v < min)
            min = v;
    }
    if (min >= 1)
        return values;
    std::vector<Rational> out;
    out.reserve(values.size());
    for (const Rational& v : values)
        out.push_back(v / min);
    return out;
}

}  // namespace sqr
