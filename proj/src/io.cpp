#include "sqr/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sqr {

namespace {

Rational coord_from_json(const nlohmann::json& v) {
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    throw BadRational("coordinate must be an integer or a \"p/q\" string, got " + v.dump());
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("boxes"))
        throw ParseError("document needs 'dimension' and 'boxes'");
    if (!doc["dimension"].is_number_integer())
        throw ParseError("'dimension' must be an integer");
    const int dim = doc["dimension"].get<int>();
    if (dim < 1)
        throw ParseError("'dimension' must be >= 1");
    if (!doc["boxes"].is_array())
        throw ParseError("'boxes' must be an array");

    std::vector<BoxD> boxes;
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& entry : doc["boxes"]) {
        if (!entry.is_object() || !entry.contains("id") || !entry.contains("intervals"))
            throw ParseError("box needs 'id' and 'intervals': " + entry.dump());
        const std::string id = entry["id"].get<std::string>();
        if (!seen.insert(id).second)
            throw DuplicateId("duplicate id '" + id + "'");
        const auto& ivs = entry["intervals"];
        if (!ivs.is_array() || static_cast<int>(ivs.size()) != dim)
            throw ParseError("box '" + id + "' needs exactly " + std::to_string(dim) +
                             " intervals");
        std::vector<Interval> axes;
        for (const auto& iv : ivs) {
            if (!iv.is_array() || iv.size() != 2)
                throw ParseError("interval must be [lo, hi] in box '" + id + "'");
            axes.emplace_back(coord_from_json(iv[0]), coord_from_json(iv[1]));
        }
        boxes.emplace_back(std::move(axes));
        labels.push_back(id);
    }
    if (boxes.empty())
        throw ParseError("document has no boxes");
    return Arrangement(std::move(boxes), std::move(labels));
}

std::string serialize_arrangement(const Arrangement& arr) {
    nlohmann::ordered_json doc;
    doc["dimension"] = arr.dimension;
    doc["boxes"] = nlohmann::ordered_json::array();
    for (int i = 0; i < arr.size(); ++i) {
        nlohmann::ordered_json box;
        box["id"] = arr.labels[static_cast<std::size_t>(i)];
        box["intervals"] = nlohmann::ordered_json::array();
        for (const Interval& iv : arr.boxes[static_cast<std::size_t>(i)].axes)
            box["intervals"].push_back({rational_to_string(iv.lo), rational_to_string(iv.hi)});
        doc["boxes"].push_back(std::move(box));
    }
    return doc.dump(2) + "\n";
}

std::string render_svg(const Arrangement& arr, const SvgOptions& options) {
    if (arr.dimension != 2 && !arr.boxes.empty())
        throw UnsupportedDimension("SVG rendering is defined for d = 2");

    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    if (!arr.boxes.empty()) {
        min_x = static_cast<double>(left(arr.boxes.front()));
        max_x = static_cast<double>(right(arr.boxes.front()));
        min_y = static_cast<double>(bottom(arr.boxes.front()));
        max_y = static_cast<double>(top(arr.boxes.front()));
        for (const BoxD& b : arr.boxes) {
            min_x = std::min(min_x, static_cast<double>(left(b)));
            max_x = std::max(max_x, static_cast<double>(right(b)));
            min_y = std::min(min_y, static_cast<double>(bottom(b)));
            max_y = std::max(max_y, static_cast<double>(top(b)));
        }
    }
    const double margin = 0.04 * std::max(max_x - min_x, max_y - min_y) + 1.0;
    min_x -= margin; max_x += margin; min_y -= margin; max_y += margin;
    const double scale = options.target_width / (max_x - min_x);
    const double canvas_h = (max_y - min_y) * scale;
    auto sx = [&](double v) { return (v - min_x) * scale; };
    auto sy = [&](double v) { return canvas_h - (v - min_y) * scale; };  // flip y

    std::ostringstream svg;
    svg.setf(std::ios::fixed);
    svg.precision(2);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << options.target_width << "\" height=\"" << canvas_h << "\" viewBox=\"0 0 "
        << options.target_width << " " << canvas_h << "\">\n";
    for (int i = 0; i < arr.size(); ++i) {
        const BoxD& b = arr.boxes[static_cast<std::size_t>(i)];
        const std::string& label = arr.labels[static_cast<std::size_t>(i)];
        const bool hot = std::find(options.highlight.begin(), options.highlight.end(), label) !=
                         options.highlight.end();
        const double x = sx(static_cast<double>(left(b)));
        const double y = sy(static_cast<double>(top(b)));
        const double w = static_cast<double>(width(b)) * scale;
        const double h = static_cast<double>(height(b)) * scale;
        svg << "  <rect id=\"" << label << "\" x=\"" << x << "\" y=\"" << y << "\" width=\""
            << w << "\" height=\"" << h << "\" fill=\"" << (hot ? "#d95f0e" : "#3182bd")
            << "\" fill-opacity=\"0.25\" stroke=\"" << (hot ? "#d95f0e" : "#08519c")
            << "\" stroke-width=\"" << (hot ? 2.5 : 1.2) << "\"/>\n";
        if (options.draw_labels)
            svg << "  <text x=\"" << x + w / 2 << "\" y=\"" << y + h / 2
                << "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
                << label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace sqr
