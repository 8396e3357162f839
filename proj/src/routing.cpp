#include "theta5/routing.hpp"

#include <algorithm>
#include <string>

namespace theta5 {

RoutingOutcome theta_route(const ThetaGraph& g, int s, int t, int step_cap) {
    if (s < 0 || s >= g.n() || t < 0 || t >= g.n())
        throw DegenerateInputError("theta_route: vertex id out of range");
    if (s == t) throw DegenerateInputError("theta_route requires s != t");
    if (step_cap < 1) throw DegenerateInputError("step_cap must be >= 1");

    RoutingOutcome out;
    out.path.vertices.push_back(s);
    int cur = s;
    while (cur != t && out.steps < step_cap) {
        ConeIndex cone = cone_index(g.config, g.vertices[cur], g.vertices[t]);
        int next = g.cone_choice(cur, cone);
        if (next < 0)
            throw GraphIntegrityError("vertex " + std::to_string(cur) +
                                      " has no cone choice toward the destination");
        out.path.length += g.edge_length(cur, next);
        out.path.vertices.push_back(next);
        ++out.steps;
        cur = next;
    }
    out.reached = (cur == t);
    out.competitiveness = out.path.length / distance(g.vertices[s], g.vertices[t]);
    return out;
}

SweepTable competitiveness_sweep(const ThetaGraph& g, int step_cap) {
    const int n = g.n();
    SweepTable table;
    table.entries.resize(static_cast<size_t>(n) * (n - 1));

#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
        size_t base = static_cast<size_t>(s) * (n - 1);
        size_t i = 0;
        for (int t = 0; t < n; ++t) {
            if (t == s) continue;
            RoutingOutcome out = theta_route(g, s, t, step_cap);
            table.entries[base + i++] = {s, t, out.reached, out.steps, out.competitiveness};
        }
    }

    double sum = 0.0;
    int reached_count = 0;
    for (const SweepEntry& e : table.entries) {
        if (e.reached) {
            table.max_competitiveness = std::max(table.max_competitiveness, e.competitiveness);
            sum += e.competitiveness;
            ++reached_count;
        } else {
            table.unreached.emplace_back(e.s, e.t);
        }
    }
    table.mean_competitiveness = reached_count > 0 ? sum / reached_count : 0.0;
    return table;
}

}  // namespace theta5
