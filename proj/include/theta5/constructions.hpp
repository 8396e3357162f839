#pragma once

#include <vector>

#include "theta5/graph.hpp"

namespace theta5 {

// A generated lower-bound point set. Placements described as "arbitrarily
// close" sit at distance O(epsilon) from their limit positions; corner
// placements are offset inward along the corner's angle bisector and boundary
// placements perpendicular to the named boundary.
struct LowerBoundInstance {
    std::vector<Point> points;
    int source = -1;
    int target = -1;
    double epsilon = 0.0;
    double expected_ratio = 0.0;
    std::vector<int> expected_path;            // empty when not pinned
    std::vector<double> expected_edge_lengths; // closed forms along expected_path
};

// The five-edge path realizing the spanning-ratio lower bound: w in the right
// corner of T(u,w) with |uw| = 1, v1 in the bottom corner of T(w,u), v2 and v3
// in the corner of T(v_i, u) furthest from u, v4 on the top boundary of
// C_1 of v3 such that u lies in C_1 of v4. Ids: u=0, w=1, v1..v4 = 2..5.
// expected_edge_lengths holds the closed-form lengths of w-v1 .. v4-u.
LowerBoundInstance theorem3_path(double epsilon);

// The 31-vertex instance whose shortest v1-v2 path realizes the lower bound.
// Executes the 18 placement steps literally and validates each step's
// shortest-path checkpoint (throwing ConstructionValidationError with the
// failing step). Ids follow insertion order: v_i has id i-1. Checkpoints are
// evaluated under the default consumption tolerance of 1e-9 times the
// bounding-box diagonal, so epsilon must stay well above that scale;
// epsilon below ~1e-7 is rejected by the checkpoints themselves.
LowerBoundInstance appendix_instance(double epsilon);

// Instance family on which greedy theta-routing pays Omega(n).
struct AdversaryInstance {
    std::vector<Point> points;
    int source = -1;
    int destination = -1;
    int cycles = 0;
    double epsilon = 0.0;
    std::vector<int> expected_route;  // intended routed sequence, source..destination
    std::vector<int> spiral_ids;      // corner subsequence of the route (no auxiliaries)
};

// Spiral of corner vertices around the destination: the source sees the
// destination at angle theta/4 from its cone bisector, and every greedy step
// hops to a vertex near the far upper corner of the current canonical
// triangle, keeping the distance to the destination essentially unchanged.
// Each cycle contributes 5 such steps (4 for the first, which shares a slot
// with the source). Routing choices of finished cycles are re-verified after
// every placement; a violation throws AdversaryValidationError.
AdversaryInstance adversary_instance(int cycles, double epsilon);

}  // namespace theta5
