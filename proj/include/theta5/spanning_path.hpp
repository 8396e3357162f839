#pragma once

#include <vector>

#include "theta5/graph.hpp"

namespace theta5 {

// Constants of the theta_5 spanning analysis.
struct SpannerConstants {
    static const double c;            // 2*(2+sqrt(5)), constructive path factor
    static const double ratio_bound;  // sqrt(50+22*sqrt(5)), upper bound on the ratio
    static const double lower_bound;  // (11*sqrt(5)-17)/2, realized lower bound
};

// One recursion step of the constructive spanning path. Exactly one label
// applies per step; the classifier throws ExhaustivenessError otherwise.
enum class CaseLabel {
    BaseEdge,
    SwapSides,
    Case1,
    Case2,
    Case3,
    Case4a,
    Case4b,
    Case4c,
    Case4d,
    Case4e1,
    Case4e2,
    Case4e3,
};

const char* to_string(CaseLabel label);

struct CaseStep {
    CaseLabel label;
    // Set when the Case4e2/Case4e3 discrimination fell within tolerance of the
    // cone boundary and was resolved by the tie-break convention.
    bool near_boundary = false;
};

// Ordered vertex sequence with its total Euclidean length and the case trace
// of the recursion that produced it (empty for shortest paths and routing).
struct PathResult {
    std::vector<int> vertices;
    double length = 0.0;
    std::vector<CaseStep> case_trace;
};

struct Classification {
    CaseLabel label;
    int v_w = -1;  // closest vertex to w in the cone of w containing u
    int v_u = -1;  // closest vertex to u in the cone of u containing w
    bool near_boundary = false;
};

// Classifies one recursion step for the ordered pair (u, w). The analysis is
// performed in the canonical frame where w lies in the closed right half of
// C_0 of u; the function establishes that frame itself.
Classification classify_case(const ThetaGraph& g, int u, int w);

// Constructive path of length at most c * |T(u,w)| between u and w, built by
// running the case analysis recursively. Requires k = 5. The canonical
// triangle shrinks strictly at every recursion step; a violation or a depth
// beyond 4n throws ConstructionFailureError.
PathResult spanning_path(const ThetaGraph& g, int u, int w);

}  // namespace theta5
