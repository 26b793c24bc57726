#include "sqr/gallery.hpp"

#include <array>
#include <map>

#include "sqr/validators.hpp"

namespace sqr {

namespace {

BoxD irect(long x1, long x2, long y1, long y2) {
    return make_rect(Rational(x1), Rational(x2), Rational(y1), Rational(y2));
}

// 90-degree clockwise rotation; keeps boxes axis-aligned.
BoxD rot(const BoxD& r) {
    return make_rect(r.y().lo, r.y().hi, -r.x().hi, -r.x().lo);
}

struct TemplatePart {
    const char* name;
    int x1, x2, y1, y2;  // on the 100x100 outer frame
};

// The gadget template. O is the outer rectangle; K,L,M,N the middle
// pinwheel; A,B,C,D sit in the four corners of O (each straddling the two
// adjacent pinwheel members); P,Q,R,S connect neighbouring corner
// rectangles along the sides, each avoiding the pinwheel member it passes.
constexpr std::array<TemplatePart, 13> kSigma = {{
    {"O", 0, 100, 0, 100},
    {"K", 20, 49, 34, 78},
    {"L", 46, 76, 44, 82},
    {"M", 50, 77, 35, 49},
    {"N", 22, 53, 30, 43},
    {"A", 4, 47, 56, 96},
    {"B", 72, 97, 46, 95},
    {"C", 51, 96, 5, 39},
    {"D", 2, 24, 3, 40},
    {"P", 1, 17, 36, 62},
    {"Q", 40, 79, 88, 99},
    {"R", 84, 99, 14, 58},
    {"S", 13, 57, 1, 9},
}};

enum Corner { TL = 0, TR = 1, BR = 2, BL = 3 };

constexpr const char* kCornerRect[4] = {"A", "B", "C", "D"};  // TL, TR, BR, BL

int template_index(const std::string& name) {
    for (std::size_t i = 0; i < kSigma.size(); ++i)
        if (name == kSigma[i].name)
            return static_cast<int>(i);
    return -1;
}

// Which corner of `box` the intersecting `partner` occupies.
Corner facing_corner(const BoxD& box, const BoxD& partner) {
    IntervalRelation rx = interval_relation(box.x(), partner.x());
    IntervalRelation ry = interval_relation(box.y(), partner.y());
    const bool right = rx == IntervalRelation::OverlapLow;
    const bool up = ry == IntervalRelation::OverlapLow;
    if (up)
        return right ? TR : TL;
    return right ? BR : BL;
}

BoxD place_part(const BoxD& frame, const TemplatePart& part) {
    const Rational w = width(frame);
    const Rational h = height(frame);
    return make_rect(left(frame) + w * part.x1 / 100, left(frame) + w * part.x2 / 100,
                     bottom(frame) + h * part.y1 / 100, bottom(frame) + h * part.y2 / 100);
}

}  // namespace

Arrangement fig2_pinwheel() {
    return Arrangement({irect(0, 10, 1, 3),    // A bottom bar
                        irect(8, 11, 0, 10),   // B right bar
                        irect(2, 13, 9, 11),   // C top bar
                        irect(1, 4, 2, 14)},   // D left bar
                       {"A", "B", "C", "D"});
}

Arrangement fig3_cycle() {
    return Arrangement({irect(0, 20, 6, 9),     // A: widest
                        irect(5, 15, 46, 51),   // B: x inside A's
                        irect(30, 50, 47, 50),  // C: y inside B's
                        irect(35, 45, 1, 16)},  // D: x inside C's, y around A's
                       {"A", "B", "C", "D"});
}

Arrangement fig4_combinatorial() {
    // Seed: bold A plus the group forcing w(A) > w(B). E,F are the grounds
    // carrying the smaller rectangle's bottom corners, Y,X the posts tying
    // the grounds to the larger rectangle's bottom corners. The remaining
    // three groups are the seed rotated around the origin.
    const BoxD boldA = irect(-6, 60, 20, 44);
    const std::array<BoxD, 4> group = {irect(9, 27, -68, -10), irect(34, 52, -64, -2),
                                       irect(-17, 18, -16, 23), irect(48, 74, -24, 25)};
    const std::array<const char*, 4> part_names = {"E", "F", "Y", "X"};

    std::vector<BoxD> boxes;
    std::vector<std::string> labels;
    BoxD bold = boldA;
    std::array<BoxD, 4> g = group;
    const std::array<const char*, 4> bold_names = {"A", "B", "C", "D"};
    for (int k = 0; k < 4; ++k) {
        boxes.push_back(bold);
        labels.emplace_back(bold_names[static_cast<std::size_t>(k)]);
        for (int p = 0; p < 4; ++p) {
            boxes.push_back(g[static_cast<std::size_t>(p)]);
            labels.push_back(std::string(part_names[static_cast<std::size_t>(p)]) +
                             std::to_string(k + 1));
        }
        bold = rot(bold);
        for (BoxD& b : g)
            b = rot(b);
    }
    return Arrangement(std::move(boxes), std::move(labels));
}

Arrangement sigma_gadget() {
    std::vector<BoxD> boxes;
    std::vector<std::string> labels;
    for (const TemplatePart& p : kSigma) {
        boxes.push_back(irect(p.x1, p.x2, p.y1, p.y2));
        labels.emplace_back(p.name);
    }
    return Arrangement(std::move(boxes), std::move(labels));
}

Arrangement substitute_gadget(const Arrangement& arr) {
    if (arr.dimension != 2)
        throw DimensionMismatch("gadget substitution is defined for d = 2");
    const int n = arr.size();

    // Wiring: which corner of each rectangle faces which partner.
    std::vector<std::map<Corner, int>> wiring(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            PairDescriptor d = classify_pair(arr.boxes[static_cast<std::size_t>(i)],
                                             arr.boxes[static_cast<std::size_t>(j)]);
            if (d.kind == PairKind::Disjoint)
                continue;
            if (d.kind != PairKind::Corner)
                throw NonCornerIntersection("pair (" + arr.labels[static_cast<std::size_t>(i)] +
                                            ", " + arr.labels[static_cast<std::size_t>(j)] +
                                            ") is " + to_string(d.kind));
            Corner ci = facing_corner(arr.boxes[static_cast<std::size_t>(i)],
                                      arr.boxes[static_cast<std::size_t>(j)]);
            Corner cj = facing_corner(arr.boxes[static_cast<std::size_t>(j)],
                                      arr.boxes[static_cast<std::size_t>(i)]);
            if (!wiring[static_cast<std::size_t>(i)].emplace(ci, j).second ||
                !wiring[static_cast<std::size_t>(j)].emplace(cj, i).second)
                throw WiringConflict("two intersections demand one gadget corner near pair (" +
                                     arr.labels[static_cast<std::size_t>(i)] + ", " +
                                     arr.labels[static_cast<std::size_t>(j)] + ")");
        }

    std::vector<BoxD> boxes;
    std::vector<std::string> labels;
    boxes.reserve(static_cast<std::size_t>(n) * kSigma.size());
    for (int i = 0; i < n; ++i)
        for (const TemplatePart& p : kSigma) {
            boxes.push_back(place_part(arr.boxes[static_cast<std::size_t>(i)], p));
            labels.push_back(arr.labels[static_cast<std::size_t>(i)] + "." + p.name);
        }
    Arrangement out(std::move(boxes), std::move(labels));

    // Post-validation: per wired pair exactly the two outers and the two
    // facing corner rectangles meet pairwise in corner intersections; no
    // other cross-gadget contact anywhere.
    const int parts = static_cast<int>(kSigma.size());
    auto part_box = [&](int gadget, int part) -> const BoxD& {
        return out.boxes[static_cast<std::size_t>(gadget * parts + part)];
    };
    const int o_idx = template_index("O");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto it = wiring[static_cast<std::size_t>(i)].begin();
            int facing_j = -1;
            for (; it != wiring[static_cast<std::size_t>(i)].end(); ++it)
                if (it->second == j)
                    facing_j = template_index(kCornerRect[it->first]);
            int facing_i = -1;
            for (auto& [c, p] : wiring[static_cast<std::size_t>(j)])
                if (p == i)
                    facing_i = template_index(kCornerRect[c]);
            const bool wired = facing_j >= 0;
            for (int pi = 0; pi < parts; ++pi)
                for (int pj = 0; pj < parts; ++pj) {
                    const bool expected =
                        wired && (pi == o_idx || pi == facing_j) && (pj == o_idx || pj == facing_i);
                    const BoxD& a = part_box(i, pi);
                    const BoxD& b = part_box(j, pj);
                    if (intersects(a, b) != expected)
                        throw BadCornerDepth("corner overlap between " +
                                             arr.labels[static_cast<std::size_t>(i)] + " and " +
                                             arr.labels[static_cast<std::size_t>(j)] +
                                             " does not fit the gadget docking windows");
                    if (expected && classify_pair(a, b).kind != PairKind::Corner)
                        throw BadCornerDepth("non-corner gadget contact between " +
                                             arr.labels[static_cast<std::size_t>(i)] + " and " +
                                             arr.labels[static_cast<std::size_t>(j)]);
                }
        }
    if (!validate_general_position(out).ok())
        throw GeneralPositionViolation("substitution produced coinciding coordinates");
    return out;
}

Arrangement fig8_composed() {
    // Bold A,B,C,D realize the nesting cycle; 1 and 2 hang below B, 3 and 4
    // sit in their far corners, and both reach A.
    Arrangement skeleton({
                             irect(-180, 460, 100, 220),   // A
                             irect(100, 220, 300, 430),    // B
                             irect(520, 1100, 310, 421),   // C
                             irect(780, 1000, 80, 260),    // D
                             irect(-123, 113, 258, 330),   // 1
                             irect(187, 459, 228, 318),    // 2
                             irect(-462, -101, 212, 270),  // 3
                             irect(420, 741, 211, 238),    // 4
                         },
                         {"A", "B", "C", "D", "1", "2", "3", "4"});
    return substitute_gadget(skeleton);
}

Arrangement fig9_boxes3d() {
    auto box3 = [](long x1, long x2, long y1, long y2, long z1, long z2) {
        return BoxD({Interval(Rational(x1), Rational(x2)), Interval(Rational(y1), Rational(y2)),
                     Interval(Rational(z1), Rational(z2))});
    };
    // Cyclic across axes: axis 1 nests B in A, axis 2 nests C in B, axis 3
    // nests A in C; every pair still intersects on all three axes.
    return Arrangement({box3(0, 30, 15, 40, 10, 20),
                        box3(10, 20, 0, 30, 15, 40),
                        box3(15, 40, 10, 20, 0, 30)},
                       {"A", "B", "C"});
}

Arrangement bipartite_grid(int m) {
    if (m < 1)
        throw SizeMismatch("bipartite grid needs m >= 1");
    std::vector<BoxD> boxes;
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) {
        boxes.push_back(irect(4 * i + 1, 4 * i + 2, -10 - i, 100 + i));
        labels.push_back("V" + std::to_string(i + 1));
    }
    for (int j = 0; j < m; ++j) {
        boxes.push_back(irect(-10 - j, 100 + j, 4 * j + 1, 4 * j + 2));
        labels.push_back("H" + std::to_string(j + 1));
    }
    return Arrangement(std::move(boxes), std::move(labels));
}

std::optional<Arrangement> gallery_by_name(const std::string& name) {
    if (name == "fig2")
        return fig2_pinwheel();
    if (name == "fig3")
        return fig3_cycle();
    if (name == "fig4")
        return fig4_combinatorial();
    if (name == "sigma")
        return sigma_gadget();
    if (name == "fig8")
        return fig8_composed();
    if (name == "fig9")
        return fig9_boxes3d();
    if (name.rfind("bipartite:", 0) == 0) {
        try {
            return bipartite_grid(std::stoi(name.substr(10)));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace sqr
