#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "dwmec/errors.hpp"

namespace dwmec {

// Absolute tolerance for sign predicates (orientation, in-circle) at
// normalized coordinate scale.
inline constexpr double kPredicateTol = 1e-12;
// Absolute tolerance for distance comparisons and point snapping at
// normalized coordinate scale.
inline constexpr double kDistanceTol = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
    Point operator-() const { return {-x, -y}; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
/// Counterclockwise quarter turn.
inline Point perp(Point a) { return {-a.y, a.x}; }

inline Point normalized(Point a) {
    double n = norm(a);
    return n > 0 ? a / n : Point{0.0, 0.0};
}

struct Circle {
    Point center;
    double radius = 0.0;
};

struct Segment {
    Point a;
    Point b;
};

/// Infinite line through `point` along unit vector `dir`.
struct Line {
    Point point;
    Point dir;
};

/// Circular arc swept counterclockwise from `begin_angle` over `sweep` > 0.
struct Arc {
    Point center;
    double radius = 0.0;
    double begin_angle = 0.0;
    double sweep = 0.0;

    Point at(double t) const {  // t in [0, 1]
        double a = begin_angle + t * sweep;
        return {center.x + radius * std::cos(a), center.y + radius * std::sin(a)};
    }
};

/// Builds the CCW arc from `from` to `to` on the circle (center, radius)
/// that avoids the direction of `avoid` as seen from the center.
inline Arc arc_avoiding(Point center, double radius, Point from, Point to, Point avoid) {
    double af = std::atan2(from.y - center.y, from.x - center.x);
    double at = std::atan2(to.y - center.y, to.x - center.x);
    double av = std::atan2(avoid.y - center.y, avoid.x - center.x);
    auto wrap = [](double a) {
        double two_pi = 2.0 * M_PI;
        a = std::fmod(a, two_pi);
        return a < 0 ? a + two_pi : a;
    };
    double sweep_ft = wrap(at - af);
    double off_avoid = wrap(av - af);
    if (off_avoid < sweep_ft) {
        // going from -> to CCW passes the avoided point; take the other way
        return {center, radius, at, wrap(af - at)};
    }
    return {center, radius, af, sweep_ft};
}

/// Twice the signed area of triangle (a, b, c); positive when CCW.
inline double orientation(Point a, Point b, Point c) {
    return cross(b - a, c - a);
}

/// In-circle determinant: positive when d lies strictly inside the circle
/// through a, b, c taken in CCW order, negative when outside. The sign
/// flips with the orientation of (a, b, c).
inline double incircle(Point a, Point b, Point c, Point d) {
    double ax = a.x - d.x, ay = a.y - d.y;
    double bx = b.x - d.x, by = b.y - d.y;
    double cx = c.x - d.x, cy = c.y - d.y;
    double a2 = ax * ax + ay * ay;
    double b2 = bx * bx + by * by;
    double c2 = cx * cx + cy * cy;
    return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

/// Center of the circle through three non-collinear points.
inline Point circumcenter(Point a, Point b, Point c, double tol = kPredicateTol) {
    double d = 2.0 * orientation(a, b, c);
    if (std::abs(d) <= tol)
        throw CollinearInput("circumcenter of (nearly) collinear points");
    double a2 = norm2(a), b2 = norm2(b), c2 = norm2(c);
    double ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    double uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    return {ux, uy};
}

/// Monotone chain. Returns indices of the hull vertices in CCW order,
/// starting from the lexicographically smallest point. Collinear points are
/// dropped, so the hull is strictly convex; a collinear input degenerates to
/// its two extreme points.
inline std::vector<int> convex_hull_indices(const std::vector<Point>& pts,
                                            double tol = kPredicateTol) {
    const int n = static_cast<int>(pts.size());
    if (n < 2) return n == 1 ? std::vector<int>{0} : std::vector<int>{};
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (pts[i].x != pts[j].x) return pts[i].x < pts[j].x;
        return pts[i].y < pts[j].y;
    });
    std::vector<int> hull;
    hull.reserve(2 * n);
    auto build = [&](auto first, auto last) {
        std::size_t base = hull.size();
        for (auto it = first; it != last; ++it) {
            while (hull.size() >= base + 2 &&
                   orientation(pts[hull[hull.size() - 2]], pts[hull.back()], pts[*it]) <= tol)
                hull.pop_back();
            hull.push_back(*it);
        }
    };
    build(order.begin(), order.end());
    hull.pop_back();  // last point repeats as the first of the upper chain
    build(order.rbegin(), order.rend());
    hull.pop_back();
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    return hull;
}

struct ConvexHull {
    std::vector<int> sites;   // site ids, CCW
    std::vector<Point> pts;   // matching coordinates

    int size() const { return static_cast<int>(sites.size()); }
    Point vertex(int k) const { return pts[static_cast<std::size_t>(k)]; }
};

/// Validated static point set. Coordinates are normalized at ingestion:
/// the centroid moves to the origin and the bounding box is scaled to unit
/// diagonal. The similarity transform is recorded so results can be mapped
/// back to the input frame.
class SiteSet {
  public:
    static SiteSet from_points(const std::vector<Point>& raw) {
        for (Point p : raw)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw DegenerateInput("non-finite site coordinate");
        if (raw.size() < 2) throw DegenerateInput("need at least two sites");

        SiteSet s;
        Point lo = raw[0], hi = raw[0], sum{0, 0};
        for (Point p : raw) {
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
            sum = sum + p;
        }
        s.shift_ = sum / static_cast<double>(raw.size());
        double diag = distance(lo, hi);
        s.scale_ = diag > 0 ? 1.0 / diag : 1.0;

        for (Point p : raw) {
            Point q = s.to_normalized(p);
            bool dup = false;
            for (Point existing : s.normalized_)
                if (distance(existing, q) < kDistanceTol) { dup = true; break; }
            if (dup) continue;
            s.normalized_.push_back(q);
            s.original_.push_back(p);
        }
        if (s.size() < 2) throw DegenerateInput("fewer than two distinct sites");
        return s;
    }

    int size() const { return static_cast<int>(normalized_.size()); }
    const std::vector<Point>& sites() const { return normalized_; }
    const std::vector<Point>& originals() const { return original_; }
    Point site(int i) const { return normalized_[static_cast<std::size_t>(i)]; }
    Point original_site(int i) const { return original_[static_cast<std::size_t>(i)]; }

    Point to_normalized(Point p) const { return (p - shift_) * scale_; }
    Point to_original(Point p) const { return p / scale_ + shift_; }
    /// Multiply a length in the input frame by this to get its normalized value.
    double scale() const { return scale_; }

  private:
    SiteSet() = default;
    std::vector<Point> normalized_;
    std::vector<Point> original_;
    Point shift_{0, 0};
    double scale_ = 1.0;
};

inline ConvexHull convex_hull(const SiteSet& sites, double tol = kPredicateTol) {
    ConvexHull h;
    h.sites = convex_hull_indices(sites.sites(), tol);
    h.pts.reserve(h.sites.size());
    for (int i : h.sites) h.pts.push_back(sites.site(i));
    return h;
}

struct GeneralPositionReport {
    bool ok = true;
    std::vector<std::array<int, 4>> violations;  // co-circular hull site ids
};

/// Scans every 4-tuple of hull vertices for co-circularity. Interior sites
/// never influence the farthest-point structure and are not examined.
inline GeneralPositionReport check_general_position(const SiteSet& sites,
                                                    double tol = kPredicateTol) {
    GeneralPositionReport report;
    ConvexHull hull = convex_hull(sites);
    const int m = hull.size();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                for (int d = c + 1; d < m; ++d) {
                    double det = incircle(hull.pts[a], hull.pts[b], hull.pts[c], hull.pts[d]);
                    if (std::abs(det) <= tol) {
                        report.ok = false;
                        report.violations.push_back(
                            {hull.sites[a], hull.sites[b], hull.sites[c], hull.sites[d]});
                    }
                }
    return report;
}

/// The dynamic-weight objective ||x - p|| / max_i ||x - x_i||, evaluated in
/// the input frame. The ratio is invariant under the ingestion similarity.
inline double evaluate_objective(Point x, const SiteSet& sites, Point p) {
    Point xn = sites.to_normalized(x);
    Point pn = sites.to_normalized(p);
    double far2 = 0.0;
    for (Point s : sites.sites()) far2 = std::max(far2, norm2(xn - s));
    return distance(xn, pn) / std::sqrt(far2);
}

/// Same objective over normalized coordinates directly.
inline double evaluate_objective_normalized(Point xn, const std::vector<Point>& sites, Point pn) {
    double far2 = 0.0;
    for (Point s : sites) far2 = std::max(far2, norm2(xn - s));
    return distance(xn, pn) / std::sqrt(far2);
}

inline double point_segment_distance(Point p, Point a, Point b) {
    Point d = b - a;
    double len2 = norm2(d);
    if (len2 == 0) return distance(p, a);
    double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
    return distance(p, a + t * d);
}

inline double point_ray_distance(Point p, Point origin, Point dir) {
    double t = std::max(0.0, dot(p - origin, dir));
    return distance(p, origin + t * dir);
}

/// Closed-polygon membership for a strictly convex CCW polygon. A two-vertex
/// hull degenerates to its segment.
inline bool point_in_hull(const ConvexHull& hull, Point p, double tol = kDistanceTol) {
    const int m = hull.size();
    if (m < 2) return false;
    if (m == 2) return point_segment_distance(p, hull.pts[0], hull.pts[1]) <= tol;
    for (int i = 0; i < m; ++i)
        if (orientation(hull.pts[i], hull.pts[(i + 1) % m], p) < -tol) return false;
    return true;
}

}  // namespace dwmec
