#ifndef SQR_VALIDATORS_HPP
#define SQR_VALIDATORS_HPP

#include <vector>

#include "sqr/geometry.hpp"

namespace sqr {

// The four squarability variants as executable checks of a candidate against
// the input, under the identity index correspondence.

// Strongest: x-sequences and y-sequences identical.
bool check_order_preserved(const Arrangement& input, const Arrangement& candidate);

// Full relation tuples identical for every pair (finer than kind equality;
// captures which sides and corners are involved).
bool check_combinatorial_equivalence(const Arrangement& input, const Arrangement& candidate);

// Same intersection edge set, and every intersecting candidate pair is a
// corner intersection or containment.
bool check_keep_intersections_no_piercing(const Arrangement& input, const Arrangement& candidate);

// Weakest: same intersection edge set.
bool check_keep_intersection_graph(const Arrangement& input, const Arrangement& candidate);

// True iff every box has all axis lengths equal (square / hypercube).
bool check_is_squares(const Arrangement& candidate);

struct AdmissibilityReport {
    struct Violation {
        int i, j;  // 0-based pair indices, i < j
        PairKind kind;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Lists pairs with side-piercing or cross intersections (d == 2 only).
AdmissibilityReport check_admissible_input(const Arrangement& arr);

}  // namespace sqr

#endif
