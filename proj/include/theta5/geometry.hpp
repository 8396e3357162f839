#pragma once

#include <cmath>
#include <optional>
#include <span>

#include "theta5/errors.hpp"

namespace theta5 {

inline constexpr double kPi = 3.14159265358979323846;

struct Point {
    double x{0.0};
    double y{0.0};
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

inline Point normalized(Point a) {
    double n = norm(a);
    return {a.x / n, a.y / n};
}

// Unit vector at the given azimuth. Azimuths are measured clockwise from the
// +y direction throughout, matching the clockwise cone labeling.
inline Point unit(double azimuth) { return {std::sin(azimuth), std::cos(azimuth)}; }

// Azimuth of a nonzero vector in [0, 2*pi).
inline double azimuth_of(Point v) {
    double a = std::atan2(v.x, v.y);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

using ConeIndex = int;

// Cone geometry parameters shared by every module. Cone C_i has its bisector
// at azimuth i*theta and half-angle pi/k; C_0 opens straight up and indices
// increase clockwise. `tolerance` is the single length tolerance used by all
// boundary predicates; `tiebreak_rotation` realizes the boundary convention
// of rotating all cone boundaries clockwise by an infinitesimal angle.
struct GeomConfig {
    int k = 5;
    double theta = 2.0 * kPi / 5.0;
    double tolerance = 0.0;
    double tiebreak_rotation = 1e-12;

    GeomConfig() = default;
    explicit GeomConfig(int cone_count, double tol = 0.0)
        : k(cone_count), theta(2.0 * kPi / cone_count), tolerance(tol) {
        if (cone_count < 4) throw DegenerateInputError("cone count k must be >= 4");
        if (tol < 0.0) throw DegenerateInputError("tolerance must be >= 0");
    }

    double half_angle() const { return kPi / k; }
    Point bisector(ConeIndex i) const { return unit(i * theta); }
    Point ray_ccw(ConeIndex i) const { return unit(i * theta - half_angle()); }
    Point ray_cw(ConeIndex i) const { return unit(i * theta + half_angle()); }
};

// Config with the default tolerance of 1e-9 times the bounding-box diagonal.
GeomConfig config_for_points(int k, std::span<const Point> pts,
                             std::optional<double> tolerance_override = std::nullopt);

// The triangle bounded by the cone of `apex` containing `target` and the line
// through `target` perpendicular to the cone bisector. `size` is the length of
// either side incident to the apex; corner_a sits on the counter-clockwise ray
// and corner_b on the clockwise ray.
struct CanonicalTriangle {
    Point apex;
    Point target;
    ConeIndex cone;
    double size;
    Point corner_a;
    Point corner_b;
    Point midpoint_m;
};

ConeIndex cone_index(const GeomConfig& cfg, Point apex, Point target);
double projection_distance(const GeomConfig& cfg, Point apex, Point target);
CanonicalTriangle canonical_triangle(const GeomConfig& cfg, Point apex, Point target);
double triangle_size(const GeomConfig& cfg, Point apex, Point target);

// Unsigned angle in [0, pi/k] between segment apex-target and the bisector of
// the cone of `apex` containing `target`.
double bisector_angle_alpha(const GeomConfig& cfg, Point apex, Point target);

// Angle-preserving transform (rotation by a multiple of theta about `pivot`,
// optionally composed with reflection across the vertical through `pivot`)
// mapping a chosen target into the closed right half of C_0 of the pivot.
struct FrameTransform {
    Point pivot;
    double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
    bool reflected = false;
    int rotation_steps = 0;  // cone index that was rotated onto C_0

    Point apply(Point p) const {
        Point v = p - pivot;
        return Point{m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y} + pivot;
    }
    // Exact inverse of apply (the matrix is orthogonal).
    Point invert(Point p) const {
        Point v = p - pivot;
        return Point{m00 * v.x + m10 * v.y, m01 * v.x + m11 * v.y} + pivot;
    }
};

FrameTransform to_canonical_frame(const GeomConfig& cfg, Point u, Point w);

}  // namespace theta5
