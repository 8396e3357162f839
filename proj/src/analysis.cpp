#include "theta5/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace theta5 {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<double> shortest_distances(const ThetaGraph& g, int source) {
    const int n = g.n();
    std::vector<double> dist(n, kInf);
    std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                        std::greater<>>
        queue;
    dist[source] = 0.0;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (d > dist[v]) continue;
        for (int nb : g.adjacency[v]) {
            double nd = d + g.edge_length(v, nb);
            if (nd < dist[nb]) {
                dist[nb] = nd;
                queue.emplace(nd, nb);
            }
        }
    }
    return dist;
}

std::optional<PathResult> shortest_path(const ThetaGraph& g, int s, int t) {
    if (s < 0 || s >= g.n() || t < 0 || t >= g.n())
        throw DegenerateInputError("shortest_path: vertex id out of range");
    if (s == t) return PathResult{{s}, 0.0, {}};
    std::vector<double> ds = shortest_distances(g, s);
    if (!std::isfinite(ds[t])) return std::nullopt;
    std::vector<double> dt = shortest_distances(g, t);

    // Walk the tight-edge DAG from s, always taking the smallest admissible
    // vertex id; this yields the lexicographically smallest optimal path.
    const double total = ds[t];
    const double slack = 1e-12 * std::max(1.0, total);
    PathResult path;
    path.vertices.push_back(s);
    int cur = s;
    while (cur != t) {
        int next = -1;
        for (int nb : g.adjacency[cur]) {
            if (ds[cur] + g.edge_length(cur, nb) + dt[nb] <= total + slack) {
                next = nb;
                break;  // adjacency is sorted ascending
            }
        }
        if (next < 0) throw GraphIntegrityError("shortest path reconstruction lost the trail");
        path.length += g.edge_length(cur, next);
        path.vertices.push_back(next);
        cur = next;
    }
    return path;
}

bool is_connected(const ThetaGraph& g) {
    const int n = g.n();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int nb : g.adjacency[v])
            if (!seen[nb]) {
                seen[nb] = 1;
                ++count;
                stack.push_back(nb);
            }
    }
    return count == n;
}

std::optional<double> spanning_ratio_bound(int k) {
    if (k == 5) return SpannerConstants::ratio_bound;
    if (k >= 7) return 1.0 / (1.0 - 2.0 * std::sin(kPi / k));
    return std::nullopt;  // no bound implemented for k in {4, 6}
}

namespace {

struct SourceResult {
    double ratio = -1.0;
    int t = -1;
    int unreachable = -1;  // smallest unreachable id, -1 if none
};

RatioReport ratio_impl(const ThetaGraph& g, bool keep_matrix, bool use_parallel) {
    const int n = g.n();
    if (n < 2) throw DegenerateInputError("spanning_ratio requires n >= 2");

    std::vector<SourceResult> per_source(n);
    RatioReport report;
    if (keep_matrix) report.per_pair_ratios.assign(static_cast<size_t>(n) * n, 0.0);

#pragma omp parallel for schedule(dynamic) if (use_parallel)
    for (int s = 0; s < n; ++s) {
        std::vector<double> dist = shortest_distances(g, s);
        SourceResult local;
        for (int t = 0; t < n; ++t) {
            if (t == s) continue;
            if (!std::isfinite(dist[t])) {
                if (local.unreachable < 0) local.unreachable = t;
                if (keep_matrix) report.per_pair_ratios[s * n + t] = kInf;
                continue;
            }
            double r = dist[t] / distance(g.vertices[s], g.vertices[t]);
            if (keep_matrix) report.per_pair_ratios[s * n + t] = r;
            if (r > local.ratio) {
                local.ratio = r;
                local.t = t;
            }
        }
        per_source[s] = local;
    }

    for (int s = 0; s < n; ++s) {
        if (per_source[s].unreachable >= 0 && report.connected) {
            report.connected = false;
            report.worst_pair = {s, per_source[s].unreachable};
        }
        if (report.connected && per_source[s].ratio > report.ratio) {
            report.ratio = per_source[s].ratio;
            report.worst_pair = {s, per_source[s].t};
        }
    }

    if (report.connected) {
        auto [s, t] = report.worst_pair;
        report.euclidean_distance = distance(g.vertices[s], g.vertices[t]);
        report.graph_distance = report.ratio * report.euclidean_distance;
    } else {
        report.ratio = kInf;
        report.graph_distance = kInf;
        auto [s, t] = report.worst_pair;
        report.euclidean_distance = distance(g.vertices[s], g.vertices[t]);
    }

    report.bound_checked = spanning_ratio_bound(g.config.k);
    report.bound_satisfied =
        report.connected && (!report.bound_checked || report.ratio <= *report.bound_checked);
    return report;
}

}  // namespace

RatioReport spanning_ratio(const ThetaGraph& g, bool keep_matrix) {
    return ratio_impl(g, keep_matrix, true);
}

RatioReport spanning_ratio_serial(const ThetaGraph& g, bool keep_matrix) {
    return ratio_impl(g, keep_matrix, false);
}

bool BoundsReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const BoundsCheck& c) { return c.pass; });
}

BoundsReport verify_bounds(const ThetaGraph& g) {
    BoundsReport report;
    const int n = g.n();
    const int k = g.config.k;
    std::ostringstream os;
    os.precision(12);

    os << "edges=" << g.edges.size() << " limit=" << static_cast<size_t>(k) * n;
    report.checks.push_back(
        {"edge-count", g.edges.size() <= static_cast<size_t>(k) * n, os.str()});

    bool connected = is_connected(g);
    if (k == 5)
        report.checks.push_back(
            {"connectivity", connected, connected ? "connected" : "graph is disconnected"});

    std::optional<double> bound = spanning_ratio_bound(k);
    if (n >= 2) {
        RatioReport ratio = spanning_ratio(g);
        os.str("");
        if (!ratio.connected) {
            os << "disconnected pair " << ratio.worst_pair.first << "-"
               << ratio.worst_pair.second;
            report.checks.push_back({"spanning-ratio", false, os.str()});
        } else if (bound) {
            os << "ratio=" << ratio.ratio << " bound=" << *bound << " worst pair "
               << ratio.worst_pair.first << "-" << ratio.worst_pair.second;
            report.checks.push_back({"spanning-ratio", ratio.ratio <= *bound, os.str()});
        } else {
            os << "ratio=" << ratio.ratio << " (no bound available for k=" << k << ")";
            report.checks.push_back({"spanning-ratio", true, os.str()});
        }
    } else {
        report.checks.push_back({"spanning-ratio", true, "vacuous for n < 2"});
    }

    if (k == 5 && n >= 2 && connected) {
        const double c = SpannerConstants::c;
        int failures = 0;
        std::string witness;
        double max_over_size = 0.0;
        for (int u = 0; u < n && failures == 0; ++u) {
            std::vector<double> dist = shortest_distances(g, u);
            for (int w = 0; w < n; ++w) {
                if (u == w) continue;
                try {
                    PathResult path = spanning_path(g, u, w);
                    double size = triangle_size(g.config, g.vertices[u], g.vertices[w]);
                    double slack = 1e-9 * std::max(1.0, path.length);
                    bool ok = path.length + slack >= dist[w] && path.length <= c * size + slack;
                    max_over_size = std::max(max_over_size, path.length / size);
                    if (!ok) {
                        ++failures;
                        witness = "pair " + std::to_string(u) + "-" + std::to_string(w);
                        break;
                    }
                } catch (const Error& e) {
                    ++failures;
                    witness = "pair " + std::to_string(u) + "-" + std::to_string(w) + ": " +
                              e.what();
                    break;
                }
            }
        }
        os.str("");
        if (failures == 0)
            os << "all ordered pairs within c*|T(u,w)|, max length/size=" << max_over_size;
        else
            os << witness;
        report.checks.push_back({"constructive-paths", failures == 0, os.str()});
    }

    return report;
}

}  // namespace theta5
