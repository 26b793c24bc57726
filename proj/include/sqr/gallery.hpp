#ifndef SQR_GALLERY_HPP
#define SQR_GALLERY_HPP

#include <optional>
#include <string>

#include "sqr/geometry.hpp"

namespace sqr {

// Concrete-coordinate constructors for the arrangements discussed in the
// figures. Coordinates are hand-chosen; every claimed property (pair kinds,
// general position, LP verdicts, certificates) is asserted by the test suite
// against the classifier and the decider.

// Four bars in a pinwheel; every cyclically consecutive pair side-piercing.
Arrangement fig2_pinwheel();

// Four disjoint rectangles realizing the nesting cycle
// B.x in A.x, C.y in B.y, D.x in C.x, A.y in D.y: unsquarable when the order
// of all sides must be preserved.
Arrangement fig3_cycle();

// The fig3 nesting cycle on four bold rectangles A,B,C,D, with each forced
// inequality realized by an auxiliary group (two grounds under the smaller
// rectangle, two posts reaching the larger one) as in the combinatorial-
// equivalence counterexample. 20 rectangles, corner/containment only.
Arrangement fig4_combinatorial();

// The 13-rectangle squarable gadget: outer O, middle pinwheel K,L,M,N,
// corner rectangles A (top-left) B (top-right) C (bottom-right) D
// (bottom-left), side connectors P,Q,R,S.
Arrangement sigma_gadget();

// Replaces every rectangle of arr by a scaled sigma gadget in its bounding
// box. Every input corner intersection becomes a four-way overlap of the two
// outers and the two facing corner rectangles; no other contacts appear.
// Throws NonCornerIntersection, WiringConflict, or BadCornerDepth.
Arrangement substitute_gadget(const Arrangement& arr);

// The eight-position arrangement (bold A,B,C,D plus 1,2,3,4) with every
// position replaced by a sigma gadget: 104 rectangles, unsquarable.
Arrangement fig8_composed();

// Three boxes in R^3, pairwise intersecting, whose single-axis projections
// force a cyclic size order (no combinatorially equivalent cubes).
Arrangement fig9_boxes3d();

// m thin vertical rectangles crossing m flat horizontal ones: K_{m,m}.
Arrangement bipartite_grid(int m);

// CLI names: fig2, fig3, fig4, sigma, fig8, fig9, bipartite:<m>.
std::optional<Arrangement> gallery_by_name(const std::string& name);

}  // namespace sqr

#endif
