#ifndef SQR_SEQUENCES_HPP
#define SQR_SEQUENCES_HPP

#include <utility>
#include <vector>

#include "sqr/geometry.hpp"

namespace sqr {

enum class Axis { X = 0, Y = 1 };

// The x-sequence (or y-sequence) of a 2D arrangement: the 2n rectangle
// indices in increasing endpoint order, plus the two positions of each
// rectangle. Positions are 1-based so the LP summation bounds can be taken
// verbatim.
struct AxisSequence {
    std::vector<int> entries;                // size 2n, 0-based rect indices
    std::vector<std::pair<int, int>> pairs;  // per rect: (j1, j2), 1-based, j1 < j2
};

// Throws GeneralPositionViolation if two endpoints coincide on the axis.
AxisSequence axis_sequence(const Arrangement& arr, Axis axis);

bool sequences_equal(const AxisSequence& a, const AxisSequence& b);

}  // namespace sqr

#endif
