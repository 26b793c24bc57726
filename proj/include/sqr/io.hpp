#ifndef SQR_IO_HPP
#define SQR_IO_HPP

#include <string>
#include <vector>

#include "sqr/geometry.hpp"

namespace sqr {

// Arrangement document format: JSON with exact rational coordinates.
//   { "dimension": 2,
//     "boxes": [ {"id": "A", "intervals": [["0","1"], ["1/2","7/3"]]}, ... ] }
// Rationals are strings "p/q" or "p"; plain JSON integers are accepted as
// shorthand on input. serialize() emits the canonical form: boxes in index
// order, every coordinate a lowest-terms string.

Arrangement parse_arrangement(const std::string& text);
std::string serialize_arrangement(const Arrangement& arr);

struct SvgOptions {
    double target_width = 640.0;
    std::vector<std::string> highlight;  // labels drawn emphasized
    bool draw_labels = true;
};

// One <rect> per rectangle, y-axis flipped so larger y renders upward.
// d == 2 only; throws UnsupportedDimension otherwise.
std::string render_svg(const Arrangement& arr, const SvgOptions& options = {});

}  // namespace sqr

#endif
