#include "theta5/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace theta5 {

bool ThetaGraph::has_edge(int u, int v) const {
    const auto& a = adjacency[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::optional<int> closest_in_cone(const GeomConfig& cfg, std::span<const Point> points,
                                   int u, ConeIndex cone) {
    const Point pu = points[u];
    const Point bis = cfg.bisector(cone);
    const int n = static_cast<int>(points.size());

    double best = std::numeric_limits<double>::infinity();
    for (int v = 0; v < n; ++v) {
        if (v == u) continue;
        if (cone_index(cfg, pu, points[v]) != cone) continue;
        best = std::min(best, dot(points[v] - pu, bis));
    }
    if (!std::isfinite(best)) return std::nullopt;

    // Second pass over the near-tie window keeps the selection independent of
    // input order: the clockwise-last candidate wins.
    const double ccw_boundary = cone * cfg.theta - cfg.half_angle();
    int winner = -1;
    double winner_angle = -1.0;
    for (int v = 0; v < n; ++v) {
        if (v == u) continue;
        if (cone_index(cfg, pu, points[v]) != cone) continue;
        if (dot(points[v] - pu, bis) > best + cfg.tolerance) continue;
        double ang = azimuth_of(points[v] - pu) - ccw_boundary;
        while (ang < -kPi) ang += 2.0 * kPi;
        while (ang >= kPi) ang -= 2.0 * kPi;
        if (winner < 0 || ang > winner_angle || (ang == winner_angle && v < winner)) {
            winner = v;
            winner_angle = ang;
        }
    }
    return winner;
}

static void reject_duplicates(const std::vector<Point>& points) {
    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return points[a].x != points[b].x ? points[a].x < points[b].x
                                          : points[a].y < points[b].y;
    });
    for (size_t i = 1; i < order.size(); ++i)
        if (points[order[i - 1]] == points[order[i]])
            throw DegenerateInputError("duplicate point in input");
    for (const Point& p : points)
        if (!is_finite(p)) throw DegenerateInputError("non-finite coordinate in input");
}

static ThetaGraph assemble(const GeomConfig& cfg, std::vector<Point> points,
                           std::vector<int> choices) {
    ThetaGraph g;
    g.config = cfg;
    g.vertices = std::move(points);
    g.cone_choices = std::move(choices);

    const int n = g.n();
    for (int u = 0; u < n; ++u)
        for (int c = 0; c < cfg.k; ++c) {
            int v = g.cone_choices[u * cfg.k + c];
            if (v >= 0) g.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

    g.adjacency.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
    return g;
}

ThetaGraph build_theta_graph(const GeomConfig& cfg, std::vector<Point> points) {
    if (points.empty()) throw DegenerateInputError("need at least one point");
    reject_duplicates(points);
    const int n = static_cast<int>(points.size());
    std::vector<int> choices(static_cast<size_t>(n) * cfg.k, -1);
    std::span<const Point> pts(points);

#pragma omp parallel for schedule(dynamic, 16)
    for (int u = 0; u < n; ++u)
        for (int c = 0; c < cfg.k; ++c)
            choices[u * cfg.k + c] = closest_in_cone(cfg, pts, u, c).value_or(-1);

    return assemble(cfg, std::move(points), std::move(choices));
}

ThetaGraph build_theta_graph_serial(const GeomConfig& cfg, std::vector<Point> points) {
    if (points.empty()) throw DegenerateInputError("need at least one point");
    reject_duplicates(points);
    const int n = static_cast<int>(points.size());
    std::vector<int> choices(static_cast<size_t>(n) * cfg.k, -1);
    std::span<const Point> pts(points);

    for (int u = 0; u < n; ++u)
        for (int c = 0; c < cfg.k; ++c)
            choices[u * cfg.k + c] = closest_in_cone(cfg, pts, u, c).value_or(-1);

    return assemble(cfg, std::move(points), std::move(choices));
}

}  // namespace theta5
