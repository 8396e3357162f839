#include "theta5/geometry.hpp"

#include <algorithm>
#include <limits>

namespace theta5 {

GeomConfig config_for_points(int k, std::span<const Point> pts,
                             std::optional<double> tolerance_override) {
    if (tolerance_override) return GeomConfig(k, *tolerance_override);
    double lox = std::numeric_limits<double>::infinity(), loy = lox;
    double hix = -lox, hiy = -lox;
    for (const Point& p : pts) {
        lox = std::min(lox, p.x);
        loy = std::min(loy, p.y);
        hix = std::max(hix, p.x);
        hiy = std::max(hiy, p.y);
    }
    double diag = pts.empty() ? 0.0 : std::hypot(hix - lox, hiy - loy);
    return GeomConfig(k, 1e-9 * diag);
}

static void require_distinct(Point apex, Point target) {
    if (apex == target)
        throw DegenerateInputError("coincident points: cone operations need apex != target");
}

ConeIndex cone_index(const GeomConfig& cfg, Point apex, Point target) {
    require_distinct(apex, target);
    double az = azimuth_of(target - apex);
    // Rotating all boundaries clockwise by tiebreak_rotation makes a point on
    // the shared boundary of C_i and C_{i+1} land in C_i, deterministically.
    double shifted = az - cfg.tiebreak_rotation + cfg.half_angle();
    int i = static_cast<int>(std::floor(shifted / cfg.theta));
    i %= cfg.k;
    if (i < 0) i += cfg.k;
    return i;
}

double projection_distance(const GeomConfig& cfg, Point apex, Point target) {
    ConeIndex i = cone_index(cfg, apex, target);
    return dot(target - apex, cfg.bisector(i));
}

CanonicalTriangle canonical_triangle(const GeomConfig& cfg, Point apex, Point target) {
    ConeIndex i = cone_index(cfg, apex, target);
    double proj = dot(target - apex, cfg.bisector(i));
    double size = proj / std::cos(cfg.half_angle());
    CanonicalTriangle t;
    t.apex = apex;
    t.target = target;
    t.cone = i;
    t.size = size;
    t.corner_a = apex + size * cfg.ray_ccw(i);
    t.corner_b = apex + size * cfg.ray_cw(i);
    t.midpoint_m = apex + proj * cfg.bisector(i);
    return t;
}

double triangle_size(const GeomConfig& cfg, Point apex, Point target) {
    ConeIndex i = cone_index(cfg, apex, target);
    return dot(target - apex, cfg.bisector(i)) / std::cos(cfg.half_angle());
}

double bisector_angle_alpha(const GeomConfig& cfg, Point apex, Point target) {
    ConeIndex i = cone_index(cfg, apex, target);
    Point v = target - apex;
    Point b = cfg.bisector(i);
    return std::atan2(std::fabs(cross(b, v)), dot(b, v));
}

FrameTransform to_canonical_frame(const GeomConfig& cfg, Point u, Point w) {
    require_distinct(u, w);
    ConeIndex i = cone_index(cfg, u, w);
    // Subtracting i*theta from every azimuth is a counter-clockwise rotation.
    double beta = i * cfg.theta;
    double c = std::cos(beta), s = std::sin(beta);
    FrameTransform tf;
    tf.pivot = u;
    tf.rotation_steps = i;
    tf.m00 = c;
    tf.m01 = -s;
    tf.m10 = s;
    tf.m11 = c;
    Point wr = tf.apply(w);
    if (wr.x - u.x < 0.0) {
        // Reflect across the vertical through u; the right half is closed.
        tf.reflected = true;
        tf.m00 = -tf.m00;
        tf.m01 = -tf.m01;
    }
    return tf;
}

}  // namespace theta5
