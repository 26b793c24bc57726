#ifndef SQR_LP_HPP
#define SQR_LP_HPP

#include <optional>
#include <vector>

#include "sqr/geometry.hpp"
#include "sqr/sequences.hpp"

namespace sqr {

// The squarability LP: variables x_1..x_{2n-1}, y_1..y_{2n-1} (gaps between
// consecutive endpoints per axis), all >= 1, and per rectangle i one equality
//   sum_{k=j1}^{j2-1} x_k  =  sum_{k=j1'}^{j2'-1} y_k
// where (j1,j2) = a(i) and (j1',j2') = b(i). Feasible iff the arrangement can
// be squared preserving the order of all sides.
struct LinearSystem {
    int num_rects = 0;  // n
    int num_vars = 0;   // 4n-2; x_k at k-1, y_k at (2n-1)+k-1
    std::vector<std::vector<Rational>> equalities;  // n rows, rhs 0
    Rational lower_bound = 1;                       // every variable >= 1
    AxisSequence xseq;  // the a(i)/b(i) maps the rows were built from
    AxisSequence yseq;
};

LinearSystem build_lp(const Arrangement& arr);

struct Witness {
    std::vector<Rational> assignment;  // size num_vars, all >= 1
    Arrangement squares;               // n squares in the positive quadrant
};

struct Verdict {
    std::optional<Witness> witness;
    bool feasible() const { return witness.has_value(); }
};

// Exact phase-one simplex over rationals (Bland's rule, no tolerances).
// Labels, when given, are carried onto the witness squares.
Verdict solve_feasibility(const LinearSystem& sys, const std::vector<std::string>& labels = {});

// Prefix-sum square reconstruction for a feasible assignment. Output passes
// check_is_squares and check_order_preserved against arr; throws
// InfeasibleAssignment otherwise.
Arrangement reconstruct_squares(const LinearSystem& sys,
                                const std::vector<Rational>& assignment,
                                const Arrangement& arr);

// Scales a positive solution of the equalities so every value is >= 1
// (multiply by the reciprocal of the minimum; no-op if already >= 1).
std::vector<Rational> normalize_blowup(const std::vector<Rational>& values);

}  // namespace sqr

#endif
