#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "theta5/geometry.hpp"

namespace theta5 {

// Theta-graph on a planar point set: every vertex connects to the vertex in
// each of its cones whose projection onto the cone bisector is smallest.
// `cone_choice` records the construction witness per vertex and cone (-1 when
// the cone is empty); every edge is witnessed by at least one choice.
struct ThetaGraph {
    GeomConfig config;
    std::vector<Point> vertices;
    std::vector<int> cone_choices;               // n*k entries, -1 = empty cone
    std::vector<std::pair<int, int>> edges;      // u < v, sorted, unique
    std::vector<std::vector<int>> adjacency;     // sorted neighbor ids

    int n() const { return static_cast<int>(vertices.size()); }
    int cone_choice(int v, ConeIndex c) const { return cone_choices[v * config.k + c]; }
    bool has_edge(int u, int v) const;
    double edge_length(int u, int v) const { return distance(vertices[u], vertices[v]); }
};

// Id of the vertex v != u with cone_index(u,v) == cone minimizing the bisector
// projection, or nullopt if the cone is empty. Projections within `tolerance`
// of the minimum are ordered by the clockwise-last rule: the candidate at the
// larger clockwise angle from the cone's counter-clockwise boundary wins.
std::optional<int> closest_in_cone(const GeomConfig& cfg, std::span<const Point> points,
                                   int u, ConeIndex cone);

// Brute-force O(k*n^2) construction, parallelized over vertices with OpenMP.
ThetaGraph build_theta_graph(const GeomConfig& cfg, std::vector<Point> points);

// Serial reference implementation; produces the identical graph.
ThetaGraph build_theta_graph_serial(const GeomConfig& cfg, std::vector<Point> points);

}  // namespace theta5
