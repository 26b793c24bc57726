#include "sqr/sequences.hpp"

#include <algorithm>

#include "sqr/errors.hpp"

namespace sqr {

AxisSequence axis_sequence(const Arrangement& arr, Axis axis) {
    if (arr.dimension != 2)
        throw DimensionMismatch("axis_sequence is defined for d = 2");
    const std::size_t c = static_cast<std::size_t>(axis);
    std::vector<std::pair<Rational, int>> events;
    events.reserve(2 * arr.boxes.size());
    for (int i = 0; i < arr.size(); ++i) {
        const Interval& iv = arr.boxes[static_cast<std::size_t>(i)].axes[c];
        events.emplace_back(iv.lo, i);
        events.emplace_back(iv.hi, i);
    }
    std::sort(events.begin(), events.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t j = 1; j < events.size(); ++j)
        if (events[j].first == events[j - 1].first)
            throw GeneralPositionViolation(
                "coinciding endpoints at " + rational_to_string(events[j].first) +
                " on axis " + (axis == Axis::X ? std::string("x") : std::string("y")));

    AxisSequence seq;
    seq.entries.reserve(events.size());
    seq.pairs.assign(arr.boxes.size(), {0, 0});
    for (std::size_t j = 0; j < events.size(); ++j) {
        int rect = events[j].second;
        seq.entries.push_back(rect);
        auto& pr = seq.pairs[static_cast<std::size_t>(rect)];
        if (pr.first == 0)
            pr.first = static_cast<int>(j) + 1;
        else
            pr.second = static_cast<int>(j) + 1;
    }
    return seq;
}

bool sequences_equal(const AxisSequence& a, const AxisSequence& b) {
    return a.entries == b.entries;
}

}  // namespace sqr
