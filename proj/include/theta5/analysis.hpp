#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta5/graph.hpp"
#include "theta5/spanning_path.hpp"

namespace theta5 {

// Worst-pair stretch certificate for a graph. When the graph is disconnected
// `connected` is false, `worst_pair` names a disconnected pair and `ratio`
// holds +infinity; reports must render that case explicitly, never as a
// sentinel number.
struct RatioReport {
    std::pair<int, int> worst_pair{-1, -1};
    double graph_distance = 0.0;
    double euclidean_distance = 0.0;
    double ratio = 0.0;
    bool connected = true;
    std::optional<double> bound_checked;  // worst-case bound for this k, if any
    bool bound_satisfied = true;
    std::vector<double> per_pair_ratios;  // n*n row-major, filled on request
};

// Euclidean-weighted single-source distances (Dijkstra).
std::vector<double> shortest_distances(const ThetaGraph& g, int source);

// Minimum-total-length path under Euclidean edge weights, or nullopt when s
// and t are disconnected. Among equal-length paths the lexicographically
// smallest vertex-id sequence is returned.
std::optional<PathResult> shortest_path(const ThetaGraph& g, int s, int t);

bool is_connected(const ThetaGraph& g);

RatioReport spanning_ratio(const ThetaGraph& g, bool keep_matrix = false);

// Serial reference for the parallel all-sources sweep inside spanning_ratio.
RatioReport spanning_ratio_serial(const ThetaGraph& g, bool keep_matrix = false);

// Worst-case spanning-ratio bound for a theta-graph with k cones: sqrt(50+22*sqrt(5))
// for k = 5, 1/(1-2*sin(pi/k)) for k >= 7, nothing for k in {4, 6}.
std::optional<double> spanning_ratio_bound(int k);

struct BoundsCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct BoundsReport {
    std::vector<BoundsCheck> checks;
    bool all_pass() const;
};

// Executable form of the construction's guarantees: edge count <= k*n, connectivity
// (k = 5), measured spanning ratio within the worst-case bound, and for k = 5 the
// constructive path dominating the shortest path while staying within
// c * |T(u,w)| for every ordered pair.
BoundsReport verify_bounds(const ThetaGraph& g);

}  // namespace theta5
