#include "sqr/validators.hpp"

#include "sqr/sequences.hpp"

namespace sqr {

namespace {

void require_same_size(const Arrangement& a, const Arrangement& b) {
    if (a.size() != b.size())
        throw SizeMismatch("arrangements differ in size: " + std::to_string(a.size()) +
                           " vs " + std::to_string(b.size()));
}

}  // namespace

bool check_order_preserved(const Arrangement& input, const Arrangement& candidate) {
    require_same_size(input, candidate);
    if (input.dimension != 2 || candidate.dimension != 2)
        throw DimensionMismatch("order preservation is defined for d = 2");
    return sequences_equal(axis_sequence(input, Axis::X), axis_sequence(candidate, Axis::X)) &&
           sequences_equal(axis_sequence(input, Axis::Y), axis_sequence(candidate, Axis::Y));
}

bool check_combinatorial_equivalence(const Arrangement& input, const Arrangement& candidate) {
    require_same_size(input, candidate);
    if (input.dimension != candidate.dimension)
        throw DimensionMismatch("combinatorial equivalence needs equal dimensions");
    for (int i = 0; i < input.size(); ++i)
        for (int j = i + 1; j < input.size(); ++j) {
            PairDescriptor a = classify_pair(input.boxes[i], input.boxes[j]);
            PairDescriptor b = classify_pair(candidate.boxes[i], candidate.boxes[j]);
            if (!(a == b))
                return false;
        }
    return true;
}

bool check_keep_intersections_no_piercing(const Arrangement& input, const Arrangement& candidate) {
    require_same_size(input, candidate);
    for (int i = 0; i < input.size(); ++i)
        for (int j = i + 1; j < input.size(); ++j) {
            bool in = intersects(input.boxes[i], input.boxes[j]);
            bool cn = intersects(candidate.boxes[i], candidate.boxes[j]);
            if (in != cn)
                return false;
            if (!cn)
                continue;
            PairKind k = classify_pair(candidate.boxes[i], candidate.boxes[j]).kind;
            if (k != PairKind::Corner && k != PairKind::Containment)
                return false;
        }
    return true;
}

bool check_keep_intersection_graph(const Arrangement& input, const Arrangement& candidate) {
    require_same_size(input, candidate);
    for (int i = 0; i < input.size(); ++i)
        for (int j = i + 1; j < input.size(); ++j)
            if (intersects(input.boxes[i], input.boxes[j]) !=
                intersects(candidate.boxes[i], candidate.boxes[j]))
                return false;
    return true;
}

bool check_is_squares(const Arrangement& candidate) {
    for (const BoxD& b : candidate.boxes) {
        const Rational side = b.axes.front().length();
        for (const Interval& iv : b.axes)
            if (iv.length() != side)
                return false;
    }
    return true;
}

AdmissibilityReport check_admissible_input(const Arrangement& arr) {
    if (arr.dimension != 2)
        throw DimensionMismatch("admissibility is defined for d = 2");
    AdmissibilityReport report;
    for (int i = 0; i < arr.size(); ++i)
        for (int j = i + 1; j < arr.size(); ++j) {
            PairKind k = classify_pair(arr.boxes[i], arr.boxes[j]).kind;
            if (k == PairKind::SidePiercing || k == PairKind::Cross)
                report.violations.push_back({i, j, k});
        }
    return report;
}

}  // namespace sqr
