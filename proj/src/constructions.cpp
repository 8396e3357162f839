#include "theta5/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "theta5/analysis.hpp"
#include "theta5/routing.hpp"

namespace theta5 {

namespace {

const GeomConfig kPlaceCfg(5);  // placement predicates, zero tolerance

// Point epsilon-inside the given corner of a triangle, offset along the
// corner's interior angle bisector.
Point corner_inward(const CanonicalTriangle& t, bool ccw, double eps) {
    Point corner = ccw ? t.corner_a : t.corner_b;
    Point other = ccw ? t.corner_b : t.corner_a;
    Point bis = normalized(normalized(t.apex - corner) + normalized(other - corner));
    return corner + eps * bis;
}

Point corner_inward(Point apex, Point target, bool ccw, double eps) {
    return corner_inward(canonical_triangle(kPlaceCfg, apex, target), ccw, eps);
}

Point far_corner_inward(Point apex, Point target, double eps) {
    CanonicalTriangle t = canonical_triangle(kPlaceCfg, apex, target);
    bool ccw = distance(t.corner_a, target) > distance(t.corner_b, target);
    return corner_inward(t, ccw, eps);
}

Point bottom_corner_inward(Point apex, Point target, double eps) {
    CanonicalTriangle t = canonical_triangle(kPlaceCfg, apex, target);
    return corner_inward(t, t.corner_a.y < t.corner_b.y, eps);
}

// Self-referential first placement: a vertex near the clockwise corner of its
// own canonical triangle from `apex`, at limit distance `scale`.
Point seed_cw_corner(Point apex, double scale, double eps) {
    CanonicalTriangle lim;
    lim.apex = apex;
    lim.corner_a = apex + scale * kPlaceCfg.ray_ccw(0);
    lim.corner_b = apex + scale * kPlaceCfg.ray_cw(0);
    return corner_inward(lim, false, eps);
}

// Vertex on the top boundary of C_1 of `apex`, positioned so that `target`
// lies just inside C_1 of the new vertex, near its bottom boundary. This is
// the placement of the final vertex of the lower-bound path.
Point top_boundary_pivot(Point apex, Point target, double eps) {
    const double knob = eps / 3.0;
    Point d = kPlaceCfg.ray_ccw(1);                      // top boundary of C_1
    Point n = unit(azimuth_of(d) + kPi / 2.0);           // into the cone
    Point e = unit(3.0 * kPi / 5.0 - knob);              // target direction from the new vertex
    Point q = target - apex - knob * n;
    double t = cross(e, q) / cross(e, d);
    if (!(t > 0.0)) throw DegenerateInputError("top_boundary_pivot: no solution on the ray");
    return apex + t * d + knob * n;
}

struct TriangleSide {
    Point a, b;      // endpoints
    Point inward;    // unit normal pointing into the triangle
};

std::vector<TriangleSide> triangle_sides(const CanonicalTriangle& t) {
    auto make = [](Point a, Point b, Point opposite) {
        Point d = normalized(b - a);
        Point n{-d.y, d.x};
        if (dot(opposite - a, n) < 0.0) n = -1.0 * n;
        return TriangleSide{a, b, n};
    };
    return {make(t.apex, t.corner_a, t.corner_b), make(t.apex, t.corner_b, t.corner_a),
            make(t.corner_a, t.corner_b, t.apex)};
}

// Proper crossings of the two triangles' boundaries, each nudged inward into
// both triangles by eps. These are the candidate readings of "arbitrarily
// close to the intersection point" of two canonical triangles.
std::vector<Point> boundary_crossing_placements(const CanonicalTriangle& t1,
                                                const CanonicalTriangle& t2, double eps) {
    std::vector<Point> out;
    for (const TriangleSide& s1 : triangle_sides(t1))
        for (const TriangleSide& s2 : triangle_sides(t2)) {
            Point r = s1.b - s1.a, s = s2.b - s2.a;
            double denom = cross(r, s);
            if (denom == 0.0) continue;
            double tp = cross(s2.a - s1.a, s) / denom;
            double up = cross(s2.a - s1.a, r) / denom;
            if (tp <= 1e-9 || tp >= 1.0 - 1e-9 || up <= 1e-9 || up >= 1.0 - 1e-9) continue;
            Point mix = s1.inward + s2.inward;
            if (norm(mix) < 0.2) continue;
            out.push_back(s1.a + tp * r + eps * normalized(mix));
        }
    std::sort(out.begin(), out.end(), [](Point a, Point b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return out;
}

bool inside_triangle(const CanonicalTriangle& t, Point p, const GeomConfig& cfg) {
    if (cone_index(cfg, t.apex, p) != t.cone) return false;
    return dot(p - t.apex, cfg.bisector(t.cone)) <=
           dot(t.target - t.apex, cfg.bisector(t.cone));
}

}  // namespace

LowerBoundInstance theorem3_path(double epsilon) {
    if (!(epsilon > 0.0)) throw DegenerateInputError("epsilon must be positive");

    const Point u{0.0, 0.0};
    const Point w = seed_cw_corner(u, 1.0, epsilon);
    const Point v1 = bottom_corner_inward(w, u, epsilon);
    const Point v2 = far_corner_inward(v1, u, epsilon);
    const Point v3 = far_corner_inward(v2, u, epsilon);
    const Point v4 = top_boundary_pivot(v3, u, epsilon);

    LowerBoundInstance inst;
    inst.points = {u, w, v1, v2, v3, v4};
    inst.source = 1;
    inst.target = 0;
    inst.epsilon = epsilon;
    inst.expected_ratio = 0.5 * (11.0 * std::sqrt(5.0) - 17.0);
    inst.expected_path = {1, 2, 3, 4, 5, 0};
    const double t5 = std::tan(kPi / 5.0);
    inst.expected_edge_lengths = {
        1.0 / std::cos(kPi / 5.0),
        2.0 * std::sin(kPi / 5.0) * t5,
        2.0 * std::sin(kPi / 5.0) * t5,
        std::sin(kPi / 10.0) / std::sin(3.0 * kPi / 5.0) * t5,
        std::sin(3.0 * kPi / 10.0) / std::sin(3.0 * kPi / 5.0) * t5,
    };
    return inst;
}

namespace {

struct AppendixBuilder {
    double eps;
    std::vector<Point> pts;

    Point& at(int v) { return pts[v - 1]; }  // 1-based vertex numbering of the steps

    void corner(int apex, int target, bool ccw) {
        pts.push_back(corner_inward(at(apex), at(target), ccw, eps));
    }

    bool passes(const std::vector<int>& expected_vertices) const {
        GeomConfig cfg = config_for_points(5, pts);
        ThetaGraph g = build_theta_graph(cfg, pts);
        auto path = shortest_path(g, 0, 1);
        std::vector<int> expected;
        for (int v : expected_vertices) expected.push_back(v - 1);
        return path && path->vertices == expected;
    }

    // After each step the shortest v1-v2 path must match the table.
    void check(int step, const std::vector<int>& expected_vertices) {
        GeomConfig cfg = config_for_points(5, pts);
        ThetaGraph g = build_theta_graph(cfg, pts);
        auto path = shortest_path(g, 0, 1);
        std::vector<int> expected;
        for (int v : expected_vertices) expected.push_back(v - 1);
        if (!path || path->vertices != expected) {
            std::ostringstream os;
            os << "appendix step " << step << " checkpoint failed: expected";
            for (int v : expected) os << " " << v;
            os << ", got";
            if (path)
                for (int v : path->vertices) os << " " << v;
            else
                os << " (disconnected)";
            throw ConstructionValidationError(os.str(), step);
        }
    }
};

}  // namespace

LowerBoundInstance appendix_instance(double epsilon) {
    if (!(epsilon > 0.0)) throw DegenerateInputError("epsilon must be positive");
    AppendixBuilder b{epsilon, {}};

    b.pts.push_back({0.0, 0.0});                              // 1: v1
    b.pts.push_back(seed_cw_corner(b.at(1), 1.0, epsilon));   // 2: v2
    b.check(2, {1, 2});

    b.corner(1, 2, true);                                     // 3: v3, v4
    b.corner(2, 1, true);
    b.check(3, {1, 4, 2});

    b.corner(1, 4, false);                                    // 4: v5, v6
    b.corner(4, 1, true);
    b.check(4, {1, 3, 2});

    b.corner(2, 3, false);                                    // 5: v7, v8
    b.corner(3, 2, true);
    b.check(5, {1, 6, 4, 2});

    b.corner(1, 6, false);                                    // 6: v9, v10
    b.corner(6, 1, true);
    b.check(6, {1, 5, 4, 2});

    b.corner(4, 5, true);                                     // 7: v11, v12
    b.corner(5, 4, false);
    b.check(7, {1, 5, 6, 4, 2});

    b.corner(5, 6, true);                                     // 8: v13, v14
    b.corner(6, 5, false);
    b.check(8, {1, 5, 14, 6, 4, 2});

    b.corner(5, 14, true);                                    // 9: v15, v16
    b.corner(14, 5, false);
    b.check(9, {1, 5, 13, 6, 4, 2});

    b.corner(6, 13, false);                                   // 10: v17, v18
    b.corner(13, 6, true);
    b.check(10, {1, 3, 8, 2});

    {                                                         // 11: v19
        CanonicalTriangle t1 = canonical_triangle(kPlaceCfg, b.at(2), b.at(8));
        CanonicalTriangle t2 = canonical_triangle(kPlaceCfg, b.at(8), b.at(2));
        bool placed = false;
        for (Point cand : boundary_crossing_placements(t1, t2, epsilon)) {
            if (inside_triangle(t1, cand, kPlaceCfg) && inside_triangle(t2, cand, kPlaceCfg)) {
                b.pts.push_back(cand);
                if (b.passes({1, 3, 7, 2})) {
                    placed = true;
                    break;
                }
                b.pts.pop_back();
            }
        }
        if (!placed)
            throw ConstructionValidationError(
                "appendix step 11: no boundary-crossing placement passes the checkpoint", 11);
    }
    b.check(11, {1, 3, 7, 2});

    b.corner(3, 7, true);                                     // 12: v20, v21
    b.corner(7, 3, false);
    b.check(12, {1, 5, 12, 2});

    b.corner(2, 12, true);                                    // 13: v22
    b.check(13, {1, 10, 6, 4, 2});

    {                                                         // 14: v23
        Point v23 = top_boundary_pivot(b.at(10), b.at(1), epsilon);
        CanonicalTriangle ta = canonical_triangle(kPlaceCfg, b.at(1), b.at(10));
        CanonicalTriangle tb = canonical_triangle(kPlaceCfg, b.at(10), b.at(1));
        if (!inside_triangle(ta, v23, kPlaceCfg) && !inside_triangle(tb, v23, kPlaceCfg))
            throw ConstructionValidationError(
                "appendix step 14: v23 fell outside T(v1,v10) and T(v10,v1)", 14);
        b.pts.push_back(v23);
    }
    b.check(14, {1, 5, 12, 4, 2});

    b.corner(4, 12, true);                                    // 15: v24, v25
    b.corner(12, 4, false);
    b.check(15, {1, 5, 13, 14, 6, 4, 2});

    b.corner(13, 14, false);                                  // 16: v26, v27
    b.corner(14, 13, true);
    b.check(16, {1, 9, 18, 6, 4, 2});

    b.corner(9, 18, false);                                   // 17: v28, v29
    b.corner(18, 9, true);
    b.check(17, {1, 5, 16, 11, 4, 2});

    b.corner(11, 16, true);                                   // 18: v30, v31
    b.corner(16, 11, false);
    b.check(18, {1, 23, 10, 6, 4, 2});

    LowerBoundInstance inst;
    inst.points = std::move(b.pts);
    inst.source = 0;
    inst.target = 1;
    inst.epsilon = epsilon;
    inst.expected_ratio = 0.5 * (11.0 * std::sqrt(5.0) - 17.0);
    inst.expected_path = {0, 22, 9, 5, 3, 1};
    return inst;
}

namespace {

// Ladder scales for the adversary placements, in units of epsilon. The depth
// ladder keeps earlier cycles deeper inside the chord through w (so distant
// apexes never prefer a later cycle), and the lateral step keeps each new
// corner strictly inside its parent's cone while the accumulated drift pushes
// every finished slot out of the cones of later vertices at the same slot.
constexpr double kDepthStep = 0.2;
constexpr double kLateralStep = 0.1;

struct AdversaryBuilder {
    double eps;
    int cycles;
    std::vector<Point> pts;   // 0 = u, 1 = w
    std::vector<int> route;   // intended routed sequence, starts at 0
    std::vector<char> aux;    // per point id: placed as repair auxiliary

    Point w() const { return pts[1]; }

    int route_choice(int v) const {
        ConeIndex cone = cone_index(kPlaceCfg, pts[v], w());
        auto c = closest_in_cone(kPlaceCfg, pts, v, cone);
        return c ? *c : 1;
    }

    // Every route vertex must still hand off to its recorded successor.
    int first_broken() const {
        for (size_t i = 0; i + 1 < route.size(); ++i)
            if (route_choice(route[i]) != route[i + 1]) return static_cast<int>(i);
        return -1;
    }

    void validate(int cycle) {
        GeomConfig cfg(5, 1e-5 * eps);
        ThetaGraph g = build_theta_graph(cfg, pts);
        RoutingOutcome out = theta_route(g, 0, 1, 20 * g.n() + 20);
        std::vector<int> expected = route;
        expected.push_back(1);
        if (!out.reached || out.path.vertices != expected) {
            std::ostringstream os;
            os << "adversary routing deviated while building cycle " << cycle << ": expected";
            for (int v : expected) os << " " << v;
            os << ", got";
            for (int v : out.path.vertices) os << " " << v;
            if (!out.reached) os << " (unreached)";
            throw AdversaryValidationError(os.str(), cycle);
        }
    }

    // Insert an auxiliary x between victim q and its recorded successor t:
    // inside T(q, z) where z is the vertex that stole q's choice, so that q
    // now picks x and x still picks t. Candidate offsets are tried until the
    // whole route verifies again.
    void repair(int route_pos, int cycle) {
        int q = route[route_pos];
        int t = route[route_pos + 1];
        int z = route_choice(q);
        if (z == t) return;
        ConeIndex cone = cone_index(kPlaceCfg, pts[q], w());
        Point ray = kPlaceCfg.ray_ccw(cone);
        Point n = unit(azimuth_of(ray) + kPi / 2.0);
        double pr = dot(pts[z] - pts[q], kPlaceCfg.bisector(cone));

        for (double along : {1.15, 1.08, 1.20, 1.00, 0.85}) {
            for (double lateral : {1e-3, 1e-2, 5e-2}) {
                Point x = pts[q] + (along * pr) * ray + (lateral * pr) * n;
                pts.push_back(x);
                aux.push_back(1);
                if (route_choice(q) == static_cast<int>(pts.size()) - 1 &&
                    route_choice(static_cast<int>(pts.size()) - 1) == t) {
                    route.insert(route.begin() + route_pos + 1,
                                 static_cast<int>(pts.size()) - 1);
                    return;
                }
                pts.pop_back();
                aux.pop_back();
            }
        }
        std::ostringstream os;
        os << "could not shield vertex " << q << " (stolen by " << z << ") in cycle " << cycle;
        throw AdversaryValidationError(os.str(), cycle);
    }

    void repair_all(int cycle) {
        for (int round = 0; round < 64; ++round) {
            int pos = first_broken();
            if (pos < 0) return;
            repair(pos, cycle);
        }
        throw AdversaryValidationError("repair pass did not stabilize", cycle);
    }
};

}  // namespace

AdversaryInstance adversary_instance(int cycles, double epsilon) {
    if (cycles < 1) throw DegenerateInputError("cycles must be >= 1");
    if (!(epsilon > 0.0)) throw DegenerateInputError("epsilon must be positive");

    const GeomConfig& cfg = kPlaceCfg;
    const Point w{0.0, 0.0};
    const Point u = -1.0 * unit(kPi / 10.0);  // angle theta/4 to the C_0 bisector

    AdversaryBuilder b{epsilon, cycles, {u, w}, {0}, {0, 0}};
    std::vector<int> spiral{0};

    const int total = 5 * cycles - 1;
    for (int j = 1; j <= total; ++j) {
        const int cycle = j / 5 + 1;
        const int parent = spiral.back();
        const Point pa = b.pts[parent];

        ConeIndex ia = cone_index(cfg, pa, w);
        Point bis = cfg.bisector(ia);
        Point nr = unit(azimuth_of(cfg.ray_ccw(ia)) + kPi / 2.0);

        // Two linear constraints pin the new corner: depth below the chord
        // through w (the per-cycle ladder) and a small lateral offset into the
        // parent's cone, just past the parent's own boundary.
        double depth = kDepthStep * epsilon * (cycles - cycle + 1);
        double rhs1 = dot(bis, w) - depth;
        double rhs2 = dot(nr, pa) + kLateralStep * epsilon;

        double det = bis.x * nr.y - bis.y * nr.x;
        Point p{(rhs1 * nr.y - rhs2 * bis.y) / det, (bis.x * rhs2 - nr.x * rhs1) / det};

        CanonicalTriangle tri = canonical_triangle(cfg, pa, w);
        if (distance(p, tri.corner_a) > 1e3 * epsilon * (j + 2))
            throw AdversaryValidationError("placement drifted from the corner", cycle);

        int id = static_cast<int>(b.pts.size());
        b.pts.push_back(p);
        b.aux.push_back(0);
        b.route.push_back(id);
        spiral.push_back(id);

        b.repair_all(cycle);
        b.validate(cycle);
    }

    AdversaryInstance inst;
    inst.cycles = cycles;
    inst.epsilon = epsilon;
    inst.points = std::move(b.pts);
    inst.source = 0;
    inst.destination = 1;
    inst.expected_route = std::move(b.route);
    inst.expected_route.push_back(1);
    inst.spiral_ids = std::move(spiral);
    inst.spiral_ids.push_back(1);
    return inst;
}

}  // namespace theta5
