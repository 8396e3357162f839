#pragma once

#include <vector>

#include "theta5/spanning_path.hpp"

namespace theta5 {

// Result of greedy theta-routing. Every hop (u, v) satisfies: v is u's cone
// choice in the cone of u containing the destination. `competitiveness` is
// path.length / |st| (meaningful when `reached`).
struct RoutingOutcome {
    PathResult path;
    bool reached = false;
    int steps = 0;
    double competitiveness = 0.0;
};

// Repeatedly follows the edge to the closest vertex in the cone containing
// the destination until arrival or until step_cap hops have been taken. The
// next hop always exists because the destination itself occupies the cone; a
// missing witness is a construction bug and throws GraphIntegrityError.
// No termination guarantee is known for theta-routing with five cones, so
// non-termination is observed and reported, never assumed away.
RoutingOutcome theta_route(const ThetaGraph& g, int s, int t, int step_cap);

struct SweepEntry {
    int s = -1;
    int t = -1;
    bool reached = false;
    int steps = 0;
    double competitiveness = 0.0;
};

struct SweepTable {
    std::vector<SweepEntry> entries;  // all ordered pairs, lexicographic
    double max_competitiveness = 0.0;
    double mean_competitiveness = 0.0;
    std::vector<std::pair<int, int>> unreached;
};

// theta_route over all ordered pairs.
SweepTable competitiveness_sweep(const ThetaGraph& g, int step_cap);

}  // namespace theta5
