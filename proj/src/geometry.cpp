#include "sqr/geometry.hpp"

#include <algorithm>
#include <map>

namespace sqr {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo >= hi)
        throw DegenerateInterval("interval needs lo < hi, got [" +
                                 rational_to_string(lo) + ", " + rational_to_string(hi) + "]");
}

BoxD::BoxD(std::vector<Interval> axes_) : axes(std::move(axes_)) {
    if (axes.empty())
        throw DimensionMismatch("box needs at least one axis");
}

BoxD make_rect(const Rational& x1, const Rational& x2,
               const Rational& y1, const Rational& y2) {
    return BoxD({Interval(x1, x2), Interval(y1, y2)});
}

Arrangement::Arrangement(std::vector<BoxD> boxes_, std::vector<std::string> labels_)
    : boxes(std::move(boxes_)), labels(std::move(labels_)) {
    if (!boxes.empty()) {
        dimension = boxes.front().dimension();
        for (const BoxD& b : boxes)
            if (b.dimension() != dimension)
                throw DimensionMismatch("arrangement boxes must share one dimension");
    }
    if (labels.empty()) {
        labels.reserve(boxes.size());
        for (std::size_t i = 0; i < boxes.size(); ++i)
            labels.push_back(std::to_string(i + 1));
    } else if (labels.size() != boxes.size()) {
        throw SizeMismatch("label count differs from box count");
    }
}

const char* to_string(IntervalRelation r) {
    switch (r) {
        case IntervalRelation::Before: return "Before";
        case IntervalRelation::After: return "After";
        case IntervalRelation::OverlapLow: return "OverlapLow";
        case IntervalRelation::OverlapHigh: return "OverlapHigh";
        case IntervalRelation::Contains: return "Contains";
        case IntervalRelation::Inside: return "Inside";
    }
    return "?";
}

const char* to_string(PairKind k) {
    switch (k) {
        case PairKind::Disjoint: return "Disjoint";
        case PairKind::Corner: return "Corner";
        case PairKind::SidePiercing: return "SidePiercing";
        case PairKind::Cross: return "Cross";
        case PairKind::Containment: return "Containment";
        case PairKind::HigherDim: return "HigherDim";
    }
    return "?";
}

IntervalRelation mirror(IntervalRelation r) {
    switch (r) {
        case IntervalRelation::Before: return IntervalRelation::After;
        case IntervalRelation::After: return IntervalRelation::Before;
        case IntervalRelation::OverlapLow: return IntervalRelation::OverlapHigh;
        case IntervalRelation::OverlapHigh: return IntervalRelation::OverlapLow;
        case IntervalRelation::Contains: return IntervalRelation::Inside;
        case IntervalRelation::Inside: return IntervalRelation::Contains;
    }
    return r;
}

IntervalRelation interval_relation(const Interval& p, const Interval& q) {
    if (p.lo == q.lo || p.lo == q.hi || p.hi == q.lo || p.hi == q.hi)
        throw SharedEndpoint("intervals share an endpoint: [" +
                             rational_to_string(p.lo) + ", " + rational_to_string(p.hi) + "] vs [" +
                             rational_to_string(q.lo) + ", " + rational_to_string(q.hi) + "]");
    if (p.hi < q.lo)
        return IntervalRelation::Before;
    if (q.hi < p.lo)
        return IntervalRelation::After;
    if (p.lo < q.lo && q.lo < p.hi && p.hi < q.hi)
        return IntervalRelation::OverlapLow;
    if (q.lo < p.lo && p.lo < q.hi && q.hi < p.hi)
        return IntervalRelation::OverlapHigh;
    if (p.lo < q.lo && q.hi < p.hi)
        return IntervalRelation::Contains;
    return IntervalRelation::Inside;
}

PairDescriptor classify_pair(const BoxD& a, const BoxD& b) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("classify_pair needs equal dimensions");
    PairDescriptor d;
    d.relations.reserve(a.axes.size());
    bool disjoint = false;
    int nested = 0;
    for (std::size_t c = 0; c < a.axes.size(); ++c) {
        IntervalRelation r = interval_relation(a.axes[c], b.axes[c]);
        d.relations.push_back(r);
        if (r == IntervalRelation::Before || r == IntervalRelation::After)
            disjoint = true;
        if (r == IntervalRelation::Contains || r == IntervalRelation::Inside)
            ++nested;
    }
    if (disjoint) {
        d.kind = PairKind::Disjoint;
    } else if (a.dimension() != 2) {
        d.kind = PairKind::HigherDim;
    } else if (nested == 0) {
        d.kind = PairKind::Corner;
    } else if (nested == 1) {
        d.kind = PairKind::SidePiercing;
    } else if (d.relations[0] == d.relations[1]) {
        d.kind = PairKind::Containment;
    } else {
        d.kind = PairKind::Cross;
    }
    return d;
}

bool intersects(const BoxD& a, const BoxD& b) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("intersects needs equal dimensions");
    for (std::size_t c = 0; c < a.axes.size(); ++c)
        if (a.axes[c].hi < b.axes[c].lo || b.axes[c].hi < a.axes[c].lo)
            return false;
    return true;
}

Arrangement project(const Arrangement& arr, const std::set<int>& index_set) {
    if (index_set.empty())
        throw EmptyIndexSet("projection needs a nonempty axis set");
    for (int c : index_set)
        if (c < 1 || c > arr.dimension)
            throw IndexOutOfRange("axis " + std::to_string(c) + " outside 1.." +
                                  std::to_string(arr.dimension));
    std::vector<BoxD> out;
    out.reserve(arr.boxes.size());
    for (const BoxD& b : arr.boxes) {
        std::vector<Interval> axes;
        axes.reserve(index_set.size());
        for (int c : index_set)
            axes.push_back(b.axes[static_cast<std::size_t>(c - 1)]);
        out.emplace_back(std::move(axes));
    }
    return Arrangement(std::move(out), arr.labels);
}

Arrangement project(const Arrangement& arr, int axis) {
    return project(arr, std::set<int>{axis});
}

GeneralPositionReport validate_general_position(const Arrangement& arr) {
    GeneralPositionReport report;
    for (int c = 0; c < arr.dimension; ++c) {
        std::map<Rational, std::vector<int>> owners;
        for (int i = 0; i < arr.size(); ++i) {
            const Interval& iv = arr.boxes[static_cast<std::size_t>(i)].axes[static_cast<std::size_t>(c)];
            owners[iv.lo].push_back(i);
            owners[iv.hi].push_back(i);
        }
        for (auto& [value, boxes] : owners) {
            if (boxes.size() > 1) {
                GeneralPositionReport::Violation v;
                v.axis = c + 1;
                v.value = value;
                v.boxes = boxes;
                report.violations.push_back(std::move(v));
            }
        }
    }
    return report;
}

}  // namespace sqr
