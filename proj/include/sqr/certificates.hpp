#ifndef SQR_CERTIFICATES_HPP
#define SQR_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "sqr/geometry.hpp"

namespace sqr {

// Directed edge i -> j: box i's interval is strictly Inside box j's on some
// axis, so in any order/containment-preserving hypercube arrangement
// side(i) < side(j).
struct SizeOrderEdge {
    int from = 0;
    int to = 0;
    int axis = 0;  // 1-based axis that forced the edge (relation is Inside)
};

struct SizeOrderGraph {
    int num_nodes = 0;
    std::vector<std::vector<SizeOrderEdge>> adjacency;  // per node, targets ascending
};

SizeOrderGraph build_size_order(const Arrangement& arr);

// A directed cycle of forced strict size inequalities: an unsquarability
// certificate. nodes.front() == nodes.back(); edges[k] justifies the step
// nodes[k] -> nodes[k+1].
struct CycleCertificate {
    std::vector<int> nodes;
    std::vector<SizeOrderEdge> edges;
};

// Deterministic lowest-index-first DFS; returns the first cycle found.
std::optional<CycleCertificate> find_cycle(const SizeOrderGraph& g);

// Exact Ramsey values only: R(k,1) = k for k >= 1, and R(3,2) = 6.
// Throws UnsupportedRamsey for anything else.
int ramsey_lookup(int k, int d);

// A hypercube with >= R(k+2,d) pairwise-disjoint hypercube neighbours, each
// intersecting the center.
struct NeighborhoodInstance {
    BoxD center;
    std::vector<BoxD> neighbors;
    int k = 1;
};

struct LemmaOutcome {
    std::optional<int> witness;  // neighbor index with side * k < center side
    std::string report;          // non-empty iff no witness exists
    bool ok() const { return witness.has_value(); }
};

// Finds a neighbour more than k times smaller than the center (smallest
// side, then lowest index). Throws TooFewNeighbors / UnsupportedRamsey /
// BadInstance when the preconditions fail.
LemmaOutcome check_neighbor_size_lemma(const NeighborhoodInstance& inst);

}  // namespace sqr

#endif
