#include "sqr/certificates.hpp"

#include <algorithm>

#include "sqr/validators.hpp"

namespace sqr {

SizeOrderGraph build_size_order(const Arrangement& arr) {
    if (!validate_general_position(arr).ok())
        throw GeneralPositionViolation("size-order graph needs general position");
    SizeOrderGraph g;
    g.num_nodes = arr.size();
    g.adjacency.assign(static_cast<std::size_t>(arr.size()), {});
    for (int i = 0; i < arr.size(); ++i)
        for (int j = 0; j < arr.size(); ++j) {
            if (i == j)
                continue;
            for (int c = 0; c < arr.dimension; ++c) {
                IntervalRelation r = interval_relation(
                    arr.boxes[static_cast<std::size_t>(i)].axes[static_cast<std::size_t>(c)],
                    arr.boxes[static_cast<std::size_t>(j)].axes[static_cast<std::size_t>(c)]);
                if (r == IntervalRelation::Inside) {
                    g.adjacency[static_cast<std::size_t>(i)].push_back({i, j, c + 1});
                    break;  // one edge per ordered pair; first forcing axis
                }
            }
        }
    return g;
}

namespace {

enum Color { White, Gray, Black };

bool dfs(const SizeOrderGraph& g, int u, std::vector<Color>& color,
         std::vector<SizeOrderEdge>& stack_edges, std::vector<int>& stack_nodes,
         CycleCertificate& out) {
    color[static_cast<std::size_t>(u)] = Gray;
    stack_nodes.push_back(u);
    for (const SizeOrderEdge& e : g.adjacency[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(e.to)] == Gray) {
            auto it = std::find(stack_nodes.begin(), stack_nodes.end(), e.to);
            const std::size_t start = static_cast<std::size_t>(it - stack_nodes.begin());
            out.nodes.assign(stack_nodes.begin() + static_cast<std::ptrdiff_t>(start),
                             stack_nodes.end());
            out.edges.assign(stack_edges.begin() + static_cast<std::ptrdiff_t>(start),
                             stack_edges.end());
            out.nodes.push_back(e.to);
            out.edges.push_back(e);
            return true;
        }
        if (color[static_cast<std::size_t>(e.to)] == White) {
            stack_edges.push_back(e);
            if (dfs(g, e.to, color, stack_edges, stack_nodes, out))
                return true;
            stack_edges.pop_back();
        }
    }
    stack_nodes.pop_back();
    color[static_cast<std::size_t>(u)] = Black;
    return false;
}

}  // namespace

std::optional<CycleCertificate> find_cycle(const SizeOrderGraph& g) {
    std::vector<Color> color(static_cast<std::size_t>(g.num_nodes), White);
    for (int s = 0; s < g.num_nodes; ++s) {
        if (color[static_cast<std::size_t>(s)] != White)
            continue;
        CycleCertificate out;
        std::vector<SizeOrderEdge> stack_edges;
        std::vector<int> stack_nodes;
        if (dfs(g, s, color, stack_edges, stack_nodes, out))
            return out;
    }
    return std::nullopt;
}

int ramsey_lookup(int k, int d) {
    if (d == 1 && k >= 1)
        return k;
    if (k == 3 && d == 2)
        return 6;
    throw UnsupportedRamsey("R(" + std::to_string(k) + "," + std::to_string(d) +
                            ") is outside the exact table");
}

LemmaOutcome check_neighbor_size_lemma(const NeighborhoodInstance& inst) {
    const int d = inst.center.dimension();
    if (inst.k < 1)
        throw BadInstance("k must be positive");
    const int needed = ramsey_lookup(inst.k + 2, d);
    if (static_cast<int>(inst.neighbors.size()) < needed)
        throw TooFewNeighbors("need at least R(k+2,d) = " + std::to_string(needed) +
                              " neighbors, got " + std::to_string(inst.neighbors.size()));

    auto side_of = [](const BoxD& b) { return b.axes.front().length(); };
    {
        std::vector<BoxD> all = inst.neighbors;
        all.push_back(inst.center);
        if (!check_is_squares(Arrangement(std::move(all))))
            throw BadInstance("center and neighbors must be hypercubes");
    }
    for (std::size_t i = 0; i < inst.neighbors.size(); ++i) {
        if (inst.neighbors[i].dimension() != d)
            throw BadInstance("neighbor dimension mismatch");
        if (!intersects(inst.neighbors[i], inst.center))
            throw BadInstance("neighbor " + std::to_string(i) + " misses the center");
        for (std::size_t j = i + 1; j < inst.neighbors.size(); ++j)
            if (intersects(inst.neighbors[i], inst.neighbors[j]))
                throw BadInstance("neighbors " + std::to_string(i) + " and " +
                                  std::to_string(j) + " are not disjoint");
    }

    const Rational center_side = side_of(inst.center);
    std::optional<int> best;
    for (std::size_t i = 0; i < inst.neighbors.size(); ++i) {
        const Rational s = side_of(inst.neighbors[i]);
        if (s * inst.k < center_side &&
            (!best || s < side_of(inst.neighbors[static_cast<std::size_t>(*best)])))
            best = static_cast<int>(i);
    }
    LemmaOutcome out;
    if (best) {
        out.witness = best;
    } else {
        out.report = "no neighbor is more than " + std::to_string(inst.k) +
                     " times smaller than the center (side " +
                     rational_to_string(center_side) + ")";
    }
    return out;
}

}  // namespace sqr
