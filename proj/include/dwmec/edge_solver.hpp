#pragma once

#include "dwmec/division_tree.hpp"

namespace dwmec {

/// Local frame of one boundary edge. The start node is the origin, the +x
/// axis points from it toward the labeling chord, and the edge itself runs
/// along the negative x axis. The two sites then sit at (chord_dist,
/// +-half_chord) and any feasible point on the edge at (-offset, 0).
struct EdgeFrame {
    Point origin;                  // start node, global coordinates
    Point axis_x;                  // unit, toward the chord
    Point axis_y;                  // unit, perp(axis_x)
    double chord_dist = 0.0;       // origin to the chord line (gamma)
    double site_dist = 0.0;        // origin to either site (r)
    double half_chord = 0.0;       // half the site separation
    std::optional<double> length;  // edge length, nullopt when unbounded
    Point site_a, site_b;          // global site positions

    Point local(Point global) const {
        Point d = global - origin;
        return {dot(d, axis_x), dot(d, axis_y)};
    }
    Point edge_dir() const { return -axis_x; }
    Point point_at(double offset) const { return origin + offset * edge_dir(); }
    bool bounded() const { return length.has_value(); }
};

/// Frame from raw geometry: start node, edge direction (start toward end),
/// optional length, and the two sites. The direction must be perpendicular
/// to the chord and point away from it (or either way when the start node
/// lies on the chord).
inline EdgeFrame make_frame_raw(Point start, Point dir, std::optional<double> length,
                                Point site_a, Point site_b) {
    EdgeFrame f;
    f.origin = start;
    f.axis_x = -normalized(dir);
    f.axis_y = perp(f.axis_x);
    f.length = length;
    f.site_a = site_a;
    f.site_b = site_b;
    Point mid = 0.5 * (site_a + site_b);
    f.chord_dist = dot(mid - start, f.axis_x);
    f.half_chord = 0.5 * distance(site_a, site_b);
    f.site_dist = distance(start, site_a);
    if (f.chord_dist < -kDistanceTol)
        throw Error("edge frame: direction does not point away from the chord");
    f.chord_dist = std::max(f.chord_dist, 0.0);
    return f;
}

inline EdgeFrame make_frame(const DtEdge& e, const DivisionTree& t) {
    return make_frame_raw(*t.node(e.parent).pos, e.dir, e.length,
                          t.site(e.sites[0]), t.site(e.sites[1]));
}

/// Restricted objective f(offset) = |x - p| / |x - site| for x at the given
/// offset along the edge.
inline double objective_on_edge(const EdgeFrame& f, Point p, double offset) {
    Point pl = f.local(p);
    double rho2 = norm2(pl);
    double num = rho2 + 2.0 * offset * pl.x + offset * offset;
    double den = f.site_dist * f.site_dist + 2.0 * f.chord_dist * offset + offset * offset;
    return std::sqrt(num / den);
}

/// Coefficients of the quadratic whose sign drives f': a t^2 + b t + c with
/// a = gamma - px, b = r^2 - rho^2, c = px r^2 - rho^2 gamma in edge-local
/// coordinates of the weight point.
struct EdgeCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    std::optional<double> stationary;  // positive root: offset of the interior peak
};

namespace detail {

/// Positive root of a t^2 + b t + c when it marks an interior maximum of f,
/// which requires c > 0 together with a < 0, or a == 0 with b < 0. Uses the
/// numerically stable quadratic form; degenerates to the linear root -c/b
/// when |a| vanishes.
inline std::optional<double> interior_peak_offset(double a, double b, double c,
                                                  double a_eps = kPredicateTol) {
    if (!(c > 0.0)) return std::nullopt;
    if (std::abs(a) <= a_eps) {
        if (b < 0.0) return -c / b;
        return std::nullopt;
    }
    if (a > 0.0) return std::nullopt;
    double disc = b * b - 4.0 * a * c;   // a*c < 0, so disc > b^2 >= 0
    double s = std::sqrt(std::max(disc, 0.0));
    double q = -0.5 * (b + (b >= 0 ? s : -s));
    double r1 = q / a;
    double r2 = q != 0.0 ? c / q : 0.0;
    return std::max(r1, r2);  // the roots have opposite signs
}

}  // namespace detail

inline EdgeCoefficients coefficients(const EdgeFrame& f, Point p) {
    Point pl = f.local(p);
    double rho2 = norm2(pl);
    double r2 = f.site_dist * f.site_dist;
    EdgeCoefficients k;
    k.a = f.chord_dist - pl.x;
    k.b = r2 - rho2;
    k.c = pl.x * r2 - rho2 * f.chord_dist;
    k.stationary = detail::interior_peak_offset(k.a, k.b, k.c);
    return k;
}

enum class EdgeSolutionKind { start_node, end_node, interior, infinity };

struct EdgeSolution {
    EdgeSolutionKind kind = EdgeSolutionKind::start_node;
    double offset = 0.0;   // from the start node; meaningful except at infinity
    double value = 0.0;
    bool unique = true;
    // Second optimal location when the weight point sits on an adjoint-region
    // boundary and two locations attain the same value.
    std::optional<std::pair<EdgeSolutionKind, double>> tie;
};

/// Monotonicity pattern of f over the edge, one tag per table region.
enum class EdgeRegion {
    start_monotone,   // f falls over the whole edge: start node wins
    start_dip,        // f dips then rises but never recovers: start node wins
    interior_peak,    // f peaks strictly inside the edge
    end_dip,          // f dips then rises past the start value: far end wins
    end_peak_beyond,  // the peak sits beyond the far node: far end wins
    end_monotone      // f rises over the whole edge: far end wins
};

struct EdgeClassification {
    EdgeRegion region = EdgeRegion::start_monotone;
    EdgeCoefficients coeff;
    EdgeSolution sol;
};

namespace detail {

struct Candidate {
    EdgeSolutionKind kind;
    double offset;
    double value;
};

inline EdgeSolution pick_best(std::vector<Candidate>& cands) {
    // Candidates arrive ordered by offset; prefer the smaller offset on ties
    // so output stays deterministic.
    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i].value > cands[best].value + kDistanceTol) best = i;
    EdgeSolution s;
    s.kind = cands[best].kind;
    s.offset = cands[best].offset;
    s.value = cands[best].value;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (i == best) continue;
        if (std::abs(cands[i].value - cands[best].value) <= kDistanceTol) {
            s.unique = false;
            if (!s.tie) s.tie = {cands[i].kind, cands[i].offset};
        }
    }
    return s;
}

}  // namespace detail

/// Optimum of f on an unbounded edge. The plane regions are separated by the
/// chord line (a = 0), the circle about the start node through the sites
/// (b = 0) and the circle through both sites and the start node (c = 0; the
/// chord line again when the start node lies on the chord).
inline EdgeClassification classify_unbounded(const EdgeFrame& f, Point p) {
    EdgeClassification out;
    out.coeff = coefficients(f, p);
    const auto& k = out.coeff;

    std::vector<detail::Candidate> cands;
    cands.push_back({EdgeSolutionKind::start_node, 0.0, objective_on_edge(f, p, 0.0)});
    if (k.stationary && *k.stationary > kDistanceTol)
        cands.push_back({EdgeSolutionKind::interior, *k.stationary,
                         objective_on_edge(f, p, *k.stationary)});
    cands.push_back({EdgeSolutionKind::infinity, std::numeric_limits<double>::infinity(), 1.0});
    out.sol = detail::pick_best(cands);

    if (k.a < 0 && k.b < 0 && k.c < 0) out.region = EdgeRegion::start_monotone;
    else if (k.a > 0 && k.b < 0 && k.c < 0) out.region = EdgeRegion::start_dip;
    else if (k.a < 0 && k.c > 0) out.region = EdgeRegion::interior_peak;
    else if (k.a > 0 && k.b > 0 && k.c < 0) out.region = EdgeRegion::end_dip;
    else if (k.a > 0 && k.b > 0 && k.c > 0) out.region = EdgeRegion::end_monotone;
    else {
        // On a boundary: tag by the winning location.
        switch (out.sol.kind) {
            case EdgeSolutionKind::start_node: out.region = EdgeRegion::start_monotone; break;
            case EdgeSolutionKind::interior: out.region = EdgeRegion::interior_peak; break;
            default: out.region = EdgeRegion::end_monotone; break;
        }
    }
    return out;
}

/// Circle b1 = 0: through both sites and the far node; the peak offset
/// equals the edge length exactly on it. Requires a bounded edge.
inline Circle stationary_at_end_circle(const EdgeFrame& f) {
    double d = *f.length;
    double r2 = f.site_dist * f.site_dist;
    double cx = (r2 - d * d) / (2.0 * (f.chord_dist + d));
    Point center = f.origin + cx * f.axis_x;
    return {center, distance(center, f.site_a)};
}

/// Circle b2 = 0: through both sites; f matches at the two endpoints exactly
/// on it. Requires a bounded edge.
inline Circle equal_endpoints_circle(const EdgeFrame& f) {
    double d = *f.length;
    double r2 = f.site_dist * f.site_dist;
    double cx = r2 / (2.0 * f.chord_dist + d);
    Point center = f.origin + cx * f.axis_x;
    return {center, distance(center, f.site_a)};
}

/// Optimum of f on a bounded edge. On top of the unbounded-case boundaries
/// the region of an interior peak splits along b1 = 0 (peak before or after
/// the far node) and the endpoint regions split along b2 = 0 (which endpoint
/// wins the value comparison).
inline EdgeClassification classify_bounded(const EdgeFrame& f, Point p) {
    EdgeClassification out;
    out.coeff = coefficients(f, p);
    const auto& k = out.coeff;
    const double d = *f.length;

    std::vector<detail::Candidate> cands;
    cands.push_back({EdgeSolutionKind::start_node, 0.0, objective_on_edge(f, p, 0.0)});
    if (k.stationary && *k.stationary > kDistanceTol && *k.stationary < d - kDistanceTol)
        cands.push_back({EdgeSolutionKind::interior, *k.stationary,
                         objective_on_edge(f, p, *k.stationary)});
    cands.push_back({EdgeSolutionKind::end_node, d, objective_on_edge(f, p, d)});
    out.sol = detail::pick_best(cands);

    Point pl = f.local(p);
    double rho2 = norm2(pl);
    double r2 = f.site_dist * f.site_dist;
    double g = f.chord_dist;
    // q1 > 0: the stationary offset lies before the far node (outside b1).
    double q1 = (g + d) * rho2 - (r2 - d * d) * pl.x - (g * d + r2) * d;
    // q2 > 0: f(0) > f(delta) (outside b2).
    double q2 = (2.0 * g + d) * rho2 - 2.0 * r2 * pl.x - r2 * d;

    if (k.a < 0 && k.c < 0) out.region = EdgeRegion::start_monotone;
    else if (k.a > 0 && k.c < 0) out.region = q2 > 0 ? EdgeRegion::start_dip : EdgeRegion::end_dip;
    else if (k.a < 0 && k.c > 0)
        out.region = q1 > 0 ? EdgeRegion::interior_peak : EdgeRegion::end_peak_beyond;
    else if (k.a > 0 && k.c > 0) out.region = EdgeRegion::end_monotone;
    else {
        switch (out.sol.kind) {
            case EdgeSolutionKind::start_node: out.region = EdgeRegion::start_monotone; break;
            case EdgeSolutionKind::interior: out.region = EdgeRegion::interior_peak; break;
            default: out.region = EdgeRegion::end_monotone; break;
        }
    }
    return out;
}

inline EdgeClassification classify(const EdgeFrame& f, Point p) {
    return f.bounded() ? classify_bounded(f, p) : classify_unbounded(f, p);
}

/// Arch membership per the extended definition: for a finite start node off
/// the chord, the region between the chord and the far arc of the circle
/// through the node and both sites; for a node on the chord, the open half
/// plane on the other side of the chord line from the edge; empty for the
/// infinity node. Containment is strict, boundary points count as outside.
inline bool arch_contains(std::optional<Point> node, Point site_a, Point site_b,
                          Point edge_dir, Point p) {
    if (!node) return false;
    Point mid = 0.5 * (site_a + site_b);
    Point toward_node = *node - mid;
    if (norm(toward_node) <= kDistanceTol) {
        // Node on the chord: half plane away from the edge.
        return dot(p - mid, edge_dir) < 0.0;
    }
    Point k = circumcenter(*node, site_a, site_b);
    if (norm2(p - k) >= norm2(site_a - k)) return false;
    return dot(p - mid, toward_node) < 0.0;
}

/// Dominant region of a tree edge: weight points whose optimum lies strictly
/// inside the edge. Arch of the parent minus arch of the child; the child
/// arch is empty for unbounded edges.
inline bool dominant_region_contains(const DtEdge& e, const DivisionTree& t, Point p) {
    Point sa = t.site(e.sites[0]), sb = t.site(e.sites[1]);
    if (!arch_contains(t.node(e.parent).pos, sa, sb, e.dir, p)) return false;
    if (e.child == t.infinity_node) return true;
    return !arch_contains(t.node(e.child).pos, sa, sb, e.dir, p);
}

}  // namespace dwmec
