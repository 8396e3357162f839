#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "theta5/analysis.hpp"
#include "theta5/io.hpp"

using namespace theta5;

namespace {

// Exhaustive oracle: minimum path length over all simple paths.
double exhaustive_shortest(const ThetaGraph& g, int s, int t) {
    std::vector<char> used(g.n(), 0);
    double best = std::numeric_limits<double>::infinity();
    auto dfs = [&](auto&& self, int v, double len) -> void {
        if (len >= best) return;
        if (v == t) {
            best = len;
            return;
        }
        used[v] = 1;
        for (int nb : g.adjacency[v])
            if (!used[nb]) self(self, nb, len + g.edge_length(v, nb));
        used[v] = 0;
    };
    dfs(dfs, s, 0.0);
    return best;
}

// Hand-assembled graph (bypassing the builder) for tie-break tests.
ThetaGraph make_graph(std::vector<Point> pts, std::vector<std::pair<int, int>> edges) {
    ThetaGraph g;
    g.config = GeomConfig(5);
    g.vertices = std::move(pts);
    g.cone_choices.assign(g.vertices.size() * 5, -1);
    std::sort(edges.begin(), edges.end());
    g.edges = std::move(edges);
    g.adjacency.assign(g.vertices.size(), {});
    for (auto [u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
    return g;
}

}  // namespace

TEST_CASE("shortest_path basics") {
    ThetaGraph g = build_theta_graph(GeomConfig(5), {{0, 0}, {1, 0.2}});

    SUBCASE("s == t") {
        auto p = shortest_path(g, 0, 0);
        REQUIRE(p.has_value());
        CHECK(p->vertices == std::vector<int>{0});
        CHECK(p->length == 0.0);
    }

    SUBCASE("two vertices: the single edge") {
        auto p = shortest_path(g, 0, 1);
        REQUIRE(p.has_value());
        CHECK(p->vertices == std::vector<int>{0, 1});
        CHECK(p->length == doctest::Approx(distance({0, 0}, {1, 0.2})).epsilon(1e-12));
    }
}

TEST_CASE("shortest_path takes the lexicographically smallest tied path") {
    // unit square, no diagonal: two equal-length paths 0-1-3 and 0-2-3
    ThetaGraph g = make_graph({{0, 0}, {0, 1}, {1, 0}, {1, 1}},
                              {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto p = shortest_path(g, 0, 3);
    REQUIRE(p.has_value());
    CHECK(p->length == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p->vertices == std::vector<int>{0, 1, 3});
}

TEST_CASE("shortest_path returns nullopt across components") {
    ThetaGraph g = make_graph({{0, 0}, {1, 0}, {10, 10}, {11, 10}}, {{0, 1}, {2, 3}});
    CHECK(!shortest_path(g, 0, 2).has_value());
    CHECK(shortest_path(g, 0, 1).has_value());
}

TEST_CASE("spanning_ratio matches exhaustive enumeration on small instances") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(2, 8);
    for (int trial = 0; trial < 50; ++trial) {
        auto pts = testsup::random_points(size(rng), 5000 + trial);
        ThetaGraph g = build_theta_graph(config_for_points(5, pts), pts);
        RatioReport report = spanning_ratio(g);
        double oracle = 0.0;
        for (int s = 0; s < g.n(); ++s)
            for (int t = 0; t < g.n(); ++t) {
                if (s == t) continue;
                oracle = std::max(oracle, exhaustive_shortest(g, s, t) /
                                              distance(g.vertices[s], g.vertices[t]));
            }
        CHECK(report.connected);
        CHECK(report.ratio == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("spanning_ratio on the unit square corners") {
    std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    ThetaGraph g = build_theta_graph(config_for_points(5, pts), pts);
    RatioReport r = spanning_ratio(g);
    double oracle = 0.0;
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
            if (s != t)
                oracle = std::max(oracle, exhaustive_shortest(g, s, t) /
                                              distance(g.vertices[s], g.vertices[t]));
    CHECK(r.ratio == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(r.ratio >= 1.0);
}

TEST_CASE("spanning_ratio trivial and degenerate cases") {
    ThetaGraph two = build_theta_graph(GeomConfig(5), {{0, 0}, {3, 1}});
    RatioReport r = spanning_ratio(two);
    CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.bound_checked.has_value());
    CHECK(r.bound_satisfied);

    ThetaGraph one = build_theta_graph(GeomConfig(5), {{0, 0}});
    CHECK_THROWS_AS(spanning_ratio(one), DegenerateInputError);
}

TEST_CASE("disconnected graphs report an explicit infinity") {
    ThetaGraph g = make_graph({{0, 0}, {1, 0}, {10, 10}, {11, 10}}, {{0, 1}, {2, 3}});
    RatioReport r = spanning_ratio(g);
    CHECK(!r.connected);
    CHECK(std::isinf(r.ratio));
    CHECK(r.worst_pair == std::pair<int, int>{0, 2});
    CHECK(!r.bound_satisfied);
    std::string text = render_ratio_report(r);
    CHECK(text.find("ratio infinity") != std::string::npos);
    CHECK(text.find("connected false") != std::string::npos);
}

TEST_CASE("graph metric sanity: symmetry and triangle inequality") {
    auto pts = testsup::random_points(60, 8);
    ThetaGraph g = build_theta_graph(config_for_points(5, pts), pts);
    std::vector<std::vector<double>> d;
    for (int s = 0; s < g.n(); ++s) d.push_back(shortest_distances(g, s));
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> pick(0, g.n() - 1);
    for (int i = 0; i < 2000; ++i) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(d[a][b] == doctest::Approx(d[b][a]).epsilon(1e-9));
        CHECK(d[a][c] <= d[a][b] + d[b][c] + 1e-9);
    }
}

TEST_CASE("dominance: constructive path never beats the shortest path") {
    auto pts = testsup::random_points(50, 88);
    ThetaGraph g = build_theta_graph(config_for_points(5, pts), pts);
    for (int u = 0; u < g.n(); ++u) {
        std::vector<double> dist = shortest_distances(g, u);
        for (int w = 0; w < g.n(); ++w) {
            if (u == w) continue;
            PathResult p = spanning_path(g, u, w);
            CHECK(p.length >= dist[w] - 1e-9 * std::max(1.0, dist[w]));
        }
    }
}

TEST_CASE("Theorem 2 maximization: min(cos a, cos(pi/5 - a)) peaks at pi/10") {
    double best_a = -1.0, best_v = -1.0;
    const int steps = 1000000;
    for (int i = 0; i <= steps; ++i) {
        double a = kPi / 5.0 * i / steps;
        double v = std::min(std::cos(a), std::cos(kPi / 5.0 - a));
        if (v > best_v) {
            best_v = v;
            best_a = a;
        }
    }
    CHECK(std::fabs(best_a - kPi / 10.0) < 1e-6);
    CHECK(best_v == doctest::Approx(std::cos(kPi / 10.0)).epsilon(1e-9));
}

TEST_CASE("is_connected") {
    CHECK(is_connected(build_theta_graph(GeomConfig(5), {{0, 0}})));
    auto pts = testsup::random_points(80, 3);
    CHECK(is_connected(build_theta_graph(config_for_points(5, pts), pts)));
    ThetaGraph split = make_graph({{0, 0}, {1, 0}, {10, 10}}, {{0, 1}});
    CHECK(!is_connected(split));
}

TEST_CASE("spanning_ratio_bound per cone count") {
    CHECK(*spanning_ratio_bound(5) == doctest::Approx(std::sqrt(50.0 + 22.0 * std::sqrt(5.0))));
    CHECK(!spanning_ratio_bound(4).has_value());
    CHECK(!spanning_ratio_bound(6).has_value());
    CHECK(*spanning_ratio_bound(7) ==
          doctest::Approx(1.0 / (1.0 - 2.0 * std::sin(kPi / 7.0))).epsilon(1e-12));
}

TEST_CASE("verify_bounds on random instances") {
    SUBCASE("k = 5 passes everything") {
        auto pts = testsup::random_points(200, 555);
        BoundsReport r = verify_bounds(build_theta_graph(config_for_points(5, pts), pts));
        CHECK(r.all_pass());
    }

    SUBCASE("k = 7 stays within the generic bound") {
        auto pts = testsup::random_points(200, 556);
        ThetaGraph g = build_theta_graph(config_for_points(7, pts), pts);
        RatioReport r = spanning_ratio(g);
        CHECK(r.connected);
        CHECK(r.ratio <= 1.0 / (1.0 - 2.0 * std::sin(kPi / 7.0)));
        CHECK(verify_bounds(g).all_pass());
    }

    SUBCASE("single point is vacuous") {
        BoundsReport r = verify_bounds(build_theta_graph(GeomConfig(5), {{0, 0}}));
        CHECK(r.all_pass());
    }
}

TEST_CASE("per-pair ratio matrix is consistent with single-pair measurements") {
    auto pts = testsup::random_points(30, 61);
    ThetaGraph g = build_theta_graph(config_for_points(5, pts), pts);
    RatioReport r = spanning_ratio(g, /*keep_matrix=*/true);
    REQUIRE(r.per_pair_ratios.size() == 900);
    double max_entry = 0.0;
    for (int s = 0; s < 30; ++s) {
        std::vector<double> dist = shortest_distances(g, s);
        CHECK(r.per_pair_ratios[s * 30 + s] == 0.0);
        for (int t = 0; t < 30; ++t) {
            if (s == t) continue;
            double expect = dist[t] / distance(g.vertices[s], g.vertices[t]);
            CHECK(r.per_pair_ratios[s * 30 + t] == doctest::Approx(expect).epsilon(1e-12));
            max_entry = std::max(max_entry, r.per_pair_ratios[s * 30 + t]);
        }
    }
    CHECK(r.ratio == doctest::Approx(max_entry).epsilon(1e-12));
    std::string text = render_ratio_report(r, true);
    CHECK(text.find("per_pair_ratios 30") != std::string::npos);
}

TEST_CASE("parallel ratio sweep matches the serial reference") {
    auto pts = testsup::random_points(120, 9);
    ThetaGraph g = build_theta_graph(config_for_points(5, pts), pts);
    RatioReport a = spanning_ratio(g);
    RatioReport b = spanning_ratio_serial(g);
    CHECK(a.ratio == b.ratio);
    CHECK(a.worst_pair == b.worst_pair);
}
