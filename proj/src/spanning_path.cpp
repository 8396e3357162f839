#include "theta5/spanning_path.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace theta5 {

const double SpannerConstants::c = 2.0 * (2.0 + std::sqrt(5.0));
const double SpannerConstants::ratio_bound = std::sqrt(50.0 + 22.0 * std::sqrt(5.0));
const double SpannerConstants::lower_bound = 0.5 * (11.0 * std::sqrt(5.0) - 17.0);

const char* to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::BaseEdge: return "BaseEdge";
        case CaseLabel::SwapSides: return "SwapSides";
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::Case3: return "Case3";
        case CaseLabel::Case4a: return "Case4a";
        case CaseLabel::Case4b: return "Case4b";
        case CaseLabel::Case4c: return "Case4c";
        case CaseLabel::Case4d: return "Case4d";
        case CaseLabel::Case4e1: return "Case4e1";
        case CaseLabel::Case4e2: return "Case4e2";
        case CaseLabel::Case4e3: return "Case4e3";
    }
    return "?";
}

static std::string pair_context(const ThetaGraph& g, int u, int w) {
    std::ostringstream os;
    os.precision(17);
    os << "u=" << u << " (" << g.vertices[u].x << "," << g.vertices[u].y << ")"
       << " w=" << w << " (" << g.vertices[w].x << "," << g.vertices[w].y << ")";
    return os.str();
}

Classification classify_case(const ThetaGraph& g, int u, int w) {
    const GeomConfig& cfg = g.config;
    if (u == w) throw DegenerateInputError("classify_case requires u != w");
    if (g.has_edge(u, w)) return {CaseLabel::BaseEdge};

    const Point pu = g.vertices[u];
    const Point pw = g.vertices[w];
    FrameTransform tf = to_canonical_frame(cfg, pu, pw);
    const Point W = tf.apply(pw);
    const double proj = W.y - pu.y;     // C_0 bisector is +y in this frame
    const double xoff = W.x - pu.x;

    // w strictly left of x, the point on the far side at angle pi/10 from the
    // bisector: the reversed triangle T(w,u) is then strictly smaller.
    if (xoff < proj * std::tan(kPi / 10.0) - cfg.tolerance) return {CaseLabel::SwapSides};

    int v_w = g.cone_choice(w, cone_index(cfg, pw, pu));
    if (v_w < 0 || v_w == u)
        throw GraphIntegrityError("missing cone choice witness for " + pair_context(g, u, w));
    const Point Vw = tf.apply(g.vertices[v_w]);

    switch (cone_index(cfg, pu, Vw)) {
        case 2: return {CaseLabel::Case1, v_w};
        case 1: return {CaseLabel::Case2, v_w};
        case 0: return {CaseLabel::Case3, v_w};
        case 4: break;  // handled below
        default:
            throw ExhaustivenessError("v_w in impossible cone of u: " + pair_context(g, u, w));
    }

    // Case 4: v_w lies in C_4 of u. The easy subcase keeps the induction on
    // T(u, v_w); the rest need v_u, the closest vertex to u in C_0.
    CanonicalTriangle Tuw = canonical_triangle(cfg, pu, W);
    if (cone_index(cfg, Tuw.corner_b, Vw) == 3) return {CaseLabel::Case4a, v_w};

    int v_u = g.cone_choice(u, cone_index(cfg, pu, pw));
    if (v_u < 0 || v_u == w)
        throw GraphIntegrityError("missing cone choice witness for " + pair_context(g, u, w));
    const Point Vu = tf.apply(g.vertices[v_u]);

    switch (cone_index(cfg, Vu, W)) {
        case 4: return {CaseLabel::Case4b, v_w, v_u};
        case 0: return {CaseLabel::Case4c, v_w, v_u};
        case 1: break;
        default:
            throw ExhaustivenessError("w in impossible cone of v_u: " + pair_context(g, u, w));
    }

    switch (cone_index(cfg, W, Vu)) {
        case 3: return {CaseLabel::Case4d, v_w, v_u};
        case 4: break;
        default:
            throw ExhaustivenessError("v_u in impossible cone of w: " + pair_context(g, u, w));
    }

    const double size_uw = triangle_size(cfg, pu, pw);
    const double size_wvu = triangle_size(cfg, pw, g.vertices[v_u]);
    const double c = SpannerConstants::c;
    if (size_wvu <= (c - 1.0) / c * size_uw) return {CaseLabel::Case4e1, v_w, v_u};

    // Subcase split on the cone of v_w containing v_u. Within tolerance of the
    // C_0/C_1 boundary the tie-break convention decides and the step is
    // flagged in the trace.
    bool near = std::fabs(cross(cfg.ray_cw(0), Vu - Vw)) < cfg.tolerance;
    switch (cone_index(cfg, Vw, Vu)) {
        case 0: return {CaseLabel::Case4e2, v_w, v_u, near};
        case 1: return {CaseLabel::Case4e3, v_w, v_u, near};
        default:
            throw ExhaustivenessError("v_u in impossible cone of v_w: " + pair_context(g, u, w));
    }
}

namespace {

struct PathBuilder {
    const ThetaGraph& g;
    int depth_cap;

    double size(int a, int b) const {
        return triangle_size(g.config, g.vertices[a], g.vertices[b]);
    }

    void require_smaller(double parent, int a, int b, const char* what) const {
        if (!(size(a, b) < parent)) {
            std::ostringstream os;
            os << "induction measure did not decrease at " << what << ": |T(" << a << "," << b
               << ")| = " << size(a, b) << " vs " << parent;
            throw ConstructionFailureError(os.str());
        }
    }

    // Returns the vertex sequence from u to w and appends this subtree's case
    // labels to the trace in recursion order.
    std::vector<int> build(int u, int w, int depth, std::vector<CaseStep>& trace) const {
        if (depth > depth_cap)
            throw ConstructionFailureError("spanning path recursion exceeded depth cap " +
                                           std::to_string(depth_cap));
        Classification cls = classify_case(g, u, w);
        trace.push_back({cls.label, cls.near_boundary});
        const double cur = size(u, w);

        switch (cls.label) {
            case CaseLabel::BaseEdge:
                return {u, w};
            case CaseLabel::SwapSides: {
                require_smaller(cur, w, u, "SwapSides");
                auto sub = build(w, u, depth + 1, trace);
                std::reverse(sub.begin(), sub.end());
                return sub;
            }
            case CaseLabel::Case1:
            case CaseLabel::Case2:
            case CaseLabel::Case3:
            case CaseLabel::Case4a: {
                require_smaller(cur, u, cls.v_w, to_string(cls.label));
                auto sub = build(u, cls.v_w, depth + 1, trace);
                sub.push_back(w);
                return sub;
            }
            case CaseLabel::Case4b:
            case CaseLabel::Case4c: {
                require_smaller(cur, cls.v_u, w, to_string(cls.label));
                auto sub = build(cls.v_u, w, depth + 1, trace);
                sub.insert(sub.begin(), u);
                return sub;
            }
            case CaseLabel::Case4d: {
                require_smaller(cur, cls.v_u, cls.v_w, "Case4d");
                auto sub = build(cls.v_u, cls.v_w, depth + 1, trace);
                sub.insert(sub.begin(), u);
                sub.push_back(w);
                return sub;
            }
            case CaseLabel::Case4e1: {
                require_smaller(cur, w, cls.v_u, "Case4e1");
                auto sub = build(w, cls.v_u, depth + 1, trace);
                std::reverse(sub.begin(), sub.end());
                sub.insert(sub.begin(), u);
                return sub;
            }
            case CaseLabel::Case4e2:
            case CaseLabel::Case4e3: {
                require_smaller(cur, cls.v_w, cls.v_u, to_string(cls.label));
                auto sub = build(cls.v_w, cls.v_u, depth + 1, trace);
                std::reverse(sub.begin(), sub.end());
                sub.insert(sub.begin(), u);
                sub.push_back(w);
                return sub;
            }
        }
        throw ExhaustivenessError("unhandled case label");
    }
};

}  // namespace

PathResult spanning_path(const ThetaGraph& g, int u, int w) {
    if (g.config.k != 5)
        throw DegenerateInputError("spanning_path requires a theta_5 graph");
    if (u < 0 || u >= g.n() || w < 0 || w >= g.n())
        throw DegenerateInputError("spanning_path: vertex id out of range");
    if (u == w) throw DegenerateInputError("spanning_path requires u != w");

    PathBuilder builder{g, 4 * g.n()};
    PathResult result;
    result.vertices = builder.build(u, w, 0, result.case_trace);

    for (size_t i = 1; i < result.vertices.size(); ++i) {
        int a = result.vertices[i - 1], b = result.vertices[i];
        if (!g.has_edge(a, b))
            throw GraphIntegrityError("constructed path uses missing edge " + std::to_string(a) +
                                      "-" + std::to_string(b));
        result.length += g.edge_length(a, b);
    }
    return result;
}

}  // namespace theta5
