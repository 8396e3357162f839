// Acceptance suite: runs every guarantee of the construction end to end and
// prints one PASS/FAIL line per criterion. Exit status is the failure count.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "theta5/analysis.hpp"
#include "theta5/constructions.hpp"
#include "theta5/routing.hpp"
#include "theta5/spanning_path.hpp"

using namespace theta5;

namespace {

std::vector<Point> random_points(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<Point> pts(n);
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    return pts;
}

int failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", index, name,
                detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

// Criteria 1 and 2 share the instance sweep: 50 instances at each size.
void criteria_connectivity_and_upper_bound() {
    int built = 0, connected_count = 0;
    double max_ratio = 0.0;
    for (int n : {10, 50, 200}) {
        for (unsigned seed = 0; seed < 50; ++seed) {
            auto pts = random_points(n, 1000u * n + seed);
            ThetaGraph g = build_theta_graph(config_for_points(5, pts), pts);
            ++built;
            RatioReport r = spanning_ratio(g);
            if (r.connected && is_connected(g)) ++connected_count;
            if (r.connected) max_ratio = std::max(max_ratio, r.ratio);
        }
    }
    report(1, "connectivity", connected_count == built,
           std::to_string(connected_count) + "/" + std::to_string(built) +
               " random instances connected (n in {10,50,200})");
    report(2, "upper bound", max_ratio < SpannerConstants::ratio_bound,
           "empirical max ratio " + fmt(max_ratio) + " < " +
               fmt(SpannerConstants::ratio_bound));
}

void criterion_constructive_path() {
    const double c = SpannerConstants::c;
    const double rb = SpannerConstants::ratio_bound;
    long pairs = 0, ok = 0;
    std::string first_failure;
    for (unsigned seed = 0; seed < 20; ++seed) {
        auto pts = random_points(50, 7000 + seed);
        ThetaGraph g = build_theta_graph(config_for_points(5, pts), pts);
        for (int u = 0; u < g.n(); ++u)
            for (int w = 0; w < g.n(); ++w) {
                if (u == w) continue;
                ++pairs;
                try {
                    PathResult p = spanning_path(g, u, w);
                    bool valid = true;
                    for (size_t i = 1; i < p.vertices.size(); ++i)
                        valid &= g.has_edge(p.vertices[i - 1], p.vertices[i]);
                    double size = triangle_size(g.config, g.vertices[u], g.vertices[w]);
                    double euclid = distance(g.vertices[u], g.vertices[w]);
                    valid &= p.length <= c * size * (1.0 + 1e-12);
                    valid &= p.length <= rb * euclid * (1.0 + 1e-12);
                    if (valid)
                        ++ok;
                    else if (first_failure.empty())
                        first_failure = "bound violated at seed " + std::to_string(seed) +
                                        " pair " + std::to_string(u) + "-" + std::to_string(w);
                } catch (const Error& e) {
                    if (first_failure.empty()) first_failure = e.what();
                }
            }
    }
    report(3, "constructive path", ok == pairs,
           ok == pairs ? std::to_string(pairs) +
                             " ordered pairs: edge-valid, monotone recursion, within both bounds"
                       : first_failure);
}

void criterion_lower_bound() {
    try {
        double ratios[3];
        int i = 0;
        for (double eps : {1e-3, 1e-4, 1e-6}) {
            LowerBoundInstance inst = appendix_instance(eps);  // validates 18 checkpoints
            ThetaGraph g = build_theta_graph(config_for_points(5, inst.points), inst.points);
            ratios[i++] = spanning_ratio(g).ratio;
        }
        bool monotone = ratios[0] <= ratios[1] && ratios[1] <= ratios[2];
        bool close = std::fabs(ratios[2] - 3.798374) <= 1e-3;
        report(4, "lower bound", monotone && close,
               "18/18 checkpoints at each epsilon; ratio(1e-6)=" + fmt(ratios[2]) +
                   " (target 3.798374 +/- 1e-3), monotone over {1e-3,1e-4,1e-6}: " +
                   (monotone ? "yes" : "NO"));
    } catch (const Error& e) {
        report(4, "lower bound", false, e.what());
    }
}

void criterion_constants() {
    const double s5 = std::sqrt(5.0);
    const double c = SpannerConstants::c;
    double worst = 0.0;
    auto check = [&](double a, double b) { worst = std::max(worst, std::fabs(a - b)); };

    // lower-bound path edge lengths, trig forms against algebraic forms
    check(1.0 / std::cos(kPi / 5.0), s5 - 1.0);
    check(2.0 * std::sin(kPi / 5.0) * std::tan(kPi / 5.0), 0.5 * (3.0 * s5 - 5.0));
    check(std::sin(kPi / 10.0) / std::sin(3.0 * kPi / 5.0) * std::tan(kPi / 5.0), s5 - 2.0);
    check(std::sin(3.0 * kPi / 10.0) / std::sin(3.0 * kPi / 5.0) * std::tan(kPi / 5.0),
          0.5 * (s5 - 1.0));
    check(1.0 / std::cos(kPi / 5.0) + 2.0 * (2.0 * std::sin(kPi / 5.0) * std::tan(kPi / 5.0)) +
              (s5 - 2.0) + 0.5 * (s5 - 1.0),
          0.5 * (11.0 * s5 - 17.0));

    // recursion case constants
    check(std::sin(3.0 * kPi / 5.0) / std::sin(3.0 * kPi / 10.0) * std::tan(kPi / 5.0),
          2.0 * std::sin(kPi / 5.0) * std::tan(kPi / 5.0));
    check(std::sin(kPi / 10.0) / std::sin(3.0 * kPi / 10.0), 0.5 * (3.0 - s5));
    check(std::sin(kPi / 10.0) / std::sin(7.0 * kPi / 10.0) / std::cos(kPi / 5.0),
          2.0 * (s5 - 2.0));
    check(std::sin(7.0 * kPi / 10.0) / std::sin(kPi / 10.0), 0.5 * (3.0 + s5));

    // ratio-bound identity
    check(c * std::cos(kPi / 10.0) / std::cos(kPi / 5.0), std::sqrt(50.0 + 22.0 * s5));

    // published decimals (6 significant places)
    bool decimals = std::fabs(2.0 * std::sin(kPi / 5.0) * std::tan(kPi / 5.0) - 0.854102) < 1e-6 &&
                    std::fabs(0.5 * (3.0 - s5) - 0.381966) < 1e-6 &&
                    std::fabs(2.0 * (s5 - 2.0) - 0.472136) < 1e-6 &&
                    std::fabs(1.0 / c + 5.0 - 2.0 * s5 - 0.645898) < 1e-6 &&
                    std::fabs(0.5 * (3.0 + s5) - 2.618034) < 1e-6;

    report(5, "closed-form constants", worst < 1e-12 && decimals,
           "max identity residual " + fmt(worst) + " (1e-12 budget), rounded decimals match");
}

void criterion_routing_adversary() {
    const double eps = 1e-9;
    const double factor = std::cos(kPi / 10.0) / std::cos(kPi / 5.0);
    std::vector<double> comps;
    bool ok = true;
    std::string detail;
    try {
        for (int cycles = 1; cycles <= 5; ++cycles) {
            AdversaryInstance inst = adversary_instance(cycles, eps);
            ThetaGraph g = build_theta_graph(GeomConfig(5, 1e-5 * eps), inst.points);
            RoutingOutcome out = theta_route(g, inst.source, inst.destination, 20 * g.n());
            ok &= out.reached && out.path.vertices == inst.expected_route;

            // every spiral step v_i -> v_i' (auxiliary detours folded in) has
            // length cos(theta/4)/cos(theta/2) * |v_i w|
            const Point w = inst.points[inst.destination];
            size_t spiral_pos = 1;
            double leg = 0.0;
            Point leg_start = inst.points[inst.spiral_ids[0]];
            for (size_t i = 1; i < out.path.vertices.size(); ++i) {
                leg += g.edge_length(out.path.vertices[i - 1], out.path.vertices[i]);
                if (out.path.vertices[i] == inst.spiral_ids[spiral_pos]) {
                    if (spiral_pos + 1 < inst.spiral_ids.size())  // not the arrival leg
                        ok &= leg >= 1.175571 * distance(leg_start, w) - 1e-6;
                    leg_start = inst.points[inst.spiral_ids[spiral_pos]];
                    leg = 0.0;
                    ++spiral_pos;
                }
            }
            ok &= spiral_pos == inst.spiral_ids.size();

            double uw = distance(inst.points[inst.source], w);
            int steps = static_cast<int>(inst.spiral_ids.size()) - 2;  // excl. arrival
            ok &= out.path.length > steps * uw;
            comps.push_back(out.competitiveness);
        }
        // strictly increasing competitiveness and positive least-squares slope
        for (size_t i = 1; i < comps.size(); ++i) ok &= comps[i] > comps[i - 1];
        double mx = 3.0, my = 0.0;
        for (double v : comps) my += v / comps.size();
        double num = 0.0, den = 0.0;
        for (size_t i = 0; i < comps.size(); ++i) {
            num += (double(i + 1) - mx) * (comps[i] - my);
            den += (double(i + 1) - mx) * (double(i + 1) - mx);
        }
        double slope = num / den;
        ok &= slope > 0.0;
        detail = "cycles 1..5 reached; per-step factor >= " + fmt(factor) +
                 "; competitiveness " + fmt(comps.front()) + " .. " + fmt(comps.back()) +
                 ", slope " + fmt(slope);
    } catch (const Error& e) {
        ok = false;
        detail = e.what();
    }
    report(6, "routing lower bound", ok, detail);
}

void criterion_oracle_equivalence() {
    std::mt19937_64 rng(6061);
    std::uniform_int_distribution<int> size(2, 8);
    int instances = 0, matches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto pts = random_points(size(rng), 80000 + trial);
        ThetaGraph g = build_theta_graph(config_for_points(5, pts), pts);
        ++instances;

        // exhaustive oracle over all simple paths
        double oracle = 0.0;
        std::vector<char> used(g.n(), 0);
        double best = 0.0;
        auto dfs = [&](auto&& self, int v, int t, double len, double& out) -> void {
            if (len >= out) return;
            if (v == t) {
                out = len;
                return;
            }
            used[v] = 1;
            for (int nb : g.adjacency[v])
                if (!used[nb]) self(self, nb, t, len + g.edge_length(v, nb), out);
            used[v] = 0;
        };
        for (int s = 0; s < g.n(); ++s)
            for (int t = 0; t < g.n(); ++t) {
                if (s == t) continue;
                best = std::numeric_limits<double>::infinity();
                dfs(dfs, s, t, 0.0, best);
                oracle = std::max(oracle, best / distance(g.vertices[s], g.vertices[t]));
            }

        RatioReport r = spanning_ratio(g);
        if (r.connected && std::fabs(r.ratio - oracle) <= 1e-9 * oracle) ++matches;
    }
    report(7, "oracle equivalence", matches == instances,
           std::to_string(matches) + "/" + std::to_string(instances) +
               " small instances match exhaustive enumeration to 1e-9");
}

void criterion_generic_k() {
    bool ok = true;
    std::string detail;
    for (int k : {7, 8, 10}) {
        double bound = 1.0 / (1.0 - 2.0 * std::sin(kPi / k));
        double worst = 0.0;
        for (unsigned seed = 0; seed < 20; ++seed) {
            auto pts = random_points(100, 90000u + 100u * k + seed);
            ThetaGraph g = build_theta_graph(config_for_points(k, pts), pts);
            RatioReport r = spanning_ratio(g);
            ok &= r.connected && r.ratio <= bound;
            worst = std::max(worst, r.ratio);
        }
        detail += "k=" + std::to_string(k) + ": max " + fmt(worst) + " <= " + fmt(bound) + "  ";
    }
    report(8, "generic-k bound", ok, detail);
}

}  // namespace

int main() {
    criteria_connectivity_and_upper_bound();
    criterion_constructive_path();
    criterion_lower_bound();
    criterion_constants();
    criterion_routing_adversary();
    criterion_oracle_equivalence();
    criterion_generic_k();
    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES present");
    return failures;
}
