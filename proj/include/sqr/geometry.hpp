#ifndef SQR_GEOMETRY_HPP
#define SQR_GEOMETRY_HPP

#include <set>
#include <string>
#include <vector>

#include "sqr/errors.hpp"
#include "sqr/rational.hpp"

namespace sqr {

// Closed interval with exact rational endpoints, lo < hi strictly.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational lo_, Rational hi_);
    Rational length() const { return hi - lo; }
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

// Axis-aligned box in R^d, d >= 1. A Rect is a BoxD with d == 2.
struct BoxD {
    std::vector<Interval> axes;

    BoxD() = default;
    explicit BoxD(std::vector<Interval> axes_);
    int dimension() const { return static_cast<int>(axes.size()); }
    const Interval& x() const { return axes.at(0); }
    const Interval& y() const { return axes.at(1); }
    bool operator==(const BoxD& o) const { return axes == o.axes; }
};

BoxD make_rect(const Rational& x1, const Rational& x2,
               const Rational& y1, const Rational& y2);

// Rectangle side accessors, matching the usual l/r/b/t/w/h notation.
inline const Rational& left(const BoxD& r) { return r.x().lo; }
inline const Rational& right(const BoxD& r) { return r.x().hi; }
inline const Rational& bottom(const BoxD& r) { return r.y().lo; }
inline const Rational& top(const BoxD& r) { return r.y().hi; }
inline Rational width(const BoxD& r) { return r.x().length(); }
inline Rational height(const BoxD& r) { return r.y().length(); }

// Indexed list of same-dimension boxes. Labels are optional display names
// (defaulted to "1".."n"); all geometric operations ignore them.
struct Arrangement {
    int dimension = 0;
    std::vector<BoxD> boxes;
    std::vector<std::string> labels;

    Arrangement() = default;
    explicit Arrangement(std::vector<BoxD> boxes_, std::vector<std::string> labels_ = {});
    int size() const { return static_cast<int>(boxes.size()); }
};

enum class IntervalRelation { Before, After, OverlapLow, OverlapHigh, Contains, Inside };

const char* to_string(IntervalRelation r);

// Mirror pairs: Before<->After, OverlapLow<->OverlapHigh, Contains<->Inside.
IntervalRelation mirror(IntervalRelation r);

// Exactly one of the six relations holds when all four endpoints are
// distinct; throws SharedEndpoint otherwise.
IntervalRelation interval_relation(const Interval& p, const Interval& q);

enum class PairKind { Disjoint, Corner, SidePiercing, Cross, Containment, HigherDim };

const char* to_string(PairKind k);

struct PairDescriptor {
    std::vector<IntervalRelation> relations;  // one per axis
    PairKind kind = PairKind::Disjoint;

    bool operator==(const PairDescriptor& o) const {
        return relations == o.relations && kind == o.kind;
    }
};

// Full relation tuple plus the named kind for d == 2. Non-disjoint pairs in
// d >= 3 get HigherDim; the relation tuple itself is the full descriptor
// there, since each extra dimension brings new intersection shapes.
PairDescriptor classify_pair(const BoxD& a, const BoxD& b);

// Closed-box intersection test; total (no general-position requirement).
bool intersects(const BoxD& a, const BoxD& b);

// Projection onto the 1-based axis index set, order preserved.
Arrangement project(const Arrangement& arr, const std::set<int>& index_set);

// Single-axis shorthand.
Arrangement project(const Arrangement& arr, int axis);

struct GeneralPositionReport {
    struct Violation {
        int axis;  // 1-based
        Rational value;
        std::vector<int> boxes;  // 0-based indices of boxes sharing the value
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Reports every coordinate value shared by two or more box sides on an axis
// (also catches a value used twice within one box's own sides on that axis).
GeneralPositionReport validate_general_position(const Arrangement& arr);

}  // namespace sqr

#endif
