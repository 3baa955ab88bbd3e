#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <utility>

#include "dwmec/geometry.hpp"

namespace dwmec {

namespace detail {

inline Circle circle_two(Point a, Point b) {
    Point c = 0.5 * (a + b);
    return {c, distance(a, b) / 2.0};
}

inline Circle circle_three(Point a, Point b, Point c) {
    Point o = circumcenter(a, b, c);
    return {o, distance(o, a)};
}

inline bool in_circle(const Circle& c, Point p, double slack = kDistanceTol) {
    return distance(c.center, p) <= c.radius + slack;
}

inline Circle mec_support(const std::vector<Point>& support) {
    switch (support.size()) {
        case 0: return {{0, 0}, 0.0};
        case 1: return {support[0], 0.0};
        case 2: return circle_two(support[0], support[1]);
        default: return circle_three(support[0], support[1], support[2]);
    }
}

inline Circle mec_recurse(const std::vector<Point>& pts, std::size_t n,
                          std::vector<Point>& support) {
    if (n == 0 || support.size() == 3) return mec_support(support);
    Circle best = mec_support(support);
    for (std::size_t i = 0; i < n; ++i) {
        if (in_circle(best, pts[i], 1e-14)) continue;
        // pts[i] must lie on the boundary of the disk of pts[0..i]
        support.push_back(pts[i]);
        best = mec_recurse(pts, i, support);
        support.pop_back();
    }
    return best;
}

/// Welzl's minidisk over normalized coordinates, fixed shuffle seed for
/// deterministic support selection.
inline Circle mec_normalized(const std::vector<Point>& sites) {
    std::vector<Point> pts = sites;
    std::mt19937 rng(0x5eed);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<Point> support;
    return mec_recurse(pts, pts.size(), support);
}

}  // namespace detail

/// Smallest circle containing every site, reported in the input frame.
inline Circle compute_mec(const SiteSet& sites) {
    Circle c = detail::mec_normalized(sites.sites());
    return {sites.to_original(c.center), c.radius / sites.scale()};
}

struct FvbNode {
    int id = -1;
    std::optional<Point> pos;         // nullopt: the symbolic infinity node
    std::vector<int> sites;           // 3 defining sites, 2 for a midpoint/root node, 0 for infinity

    bool finite() const { return pos.has_value(); }
};

struct FvbEdge {
    int id = -1;
    std::array<int, 2> sites{};       // the labeling pair (i, j)
    int start = -1;                   // node nearer to segment x_i x_j
    int end = -1;                     // farther node, possibly the infinity node
    Point dir;                        // unit vector from start toward end
    std::optional<double> length;     // nullopt: unbounded

    bool bounded() const { return length.has_value(); }
};

/// The boundary graph of the farthest-point Voronoi diagram, in normalized
/// coordinates. Immutable after construction.
struct FvbGraph {
    std::vector<FvbNode> nodes;
    std::vector<FvbEdge> edges;
    int infinity_node = -1;
    Circle mec;                   // normalized frame
    ConvexHull hull;              // normalized frame
    std::vector<Point> site_pts;  // normalized coordinates, indexed by site id

    const FvbNode& node(int id) const { return nodes[static_cast<std::size_t>(id)]; }
    const FvbEdge& edge(int id) const { return edges[static_cast<std::size_t>(id)]; }
    Point site(int id) const { return site_pts[static_cast<std::size_t>(id)]; }
    Point chord_midpoint(const FvbEdge& e) const {
        return 0.5 * (site(e.sites[0]) + site(e.sites[1]));
    }

    double distance_to_graph(Point p) const {
        double best = std::numeric_limits<double>::infinity();
        for (const FvbEdge& e : edges) {
            Point a = *node(e.start).pos;
            double d = e.bounded() ? point_segment_distance(p, a, a + *e.length * e.dir)
                                   : point_ray_distance(p, a, e.dir);
            best = std::min(best, d);
        }
        return best;
    }

    std::vector<int> incident_edges(int node_id) const {
        std::vector<int> out;
        for (const FvbEdge& e : edges)
            if (e.start == node_id || e.end == node_id) out.push_back(e.id);
        return out;
    }

    /// Edges labeled with the given site; these bound the site's cell.
    std::vector<int> cell_edges(int site_id) const {
        std::vector<int> out;
        for (const FvbEdge& e : edges)
            if (e.sites[0] == site_id || e.sites[1] == site_id) out.push_back(e.id);
        return out;
    }
};

namespace detail {

inline Point chord_midpoint(const SiteSet& sites, std::array<int, 2> pair) {
    return 0.5 * (sites.site(pair[0]) + sites.site(pair[1]));
}

}  // namespace detail

/// Builds FVB(S). Non-hull sites never carry a nonempty cell and are ignored.
/// The finite nodes are the circumcenters of the hull-vertex triples whose
/// circumcircle contains every other hull vertex; two triples sharing a pair
/// are joined by a bounded edge and each hull edge contributes one unbounded
/// edge. For two hull vertices the graph is the full perpendicular bisector,
/// stored as two unbounded edges meeting at the segment midpoint.
inline FvbGraph build_fvb(const SiteSet& sites, double tol = kPredicateTol) {
    GeneralPositionReport gp = check_general_position(sites, tol);
    if (!gp.ok) throw GeneralPositionViolation(gp.violations);

    FvbGraph g;
    g.hull = convex_hull(sites);
    g.mec = detail::mec_normalized(sites.sites());
    g.site_pts = sites.sites();
    const int m = g.hull.size();

    auto add_node = [&](std::optional<Point> pos, std::vector<int> ids) {
        FvbNode n;
        n.id = static_cast<int>(g.nodes.size());
        n.pos = pos;
        n.sites = std::move(ids);
        g.nodes.push_back(n);
        return n.id;
    };
    auto add_edge = [&](std::array<int, 2> pair, int a, int b, Point dir,
                        std::optional<double> len) {
        FvbEdge e;
        e.id = static_cast<int>(g.edges.size());
        e.sites = pair;
        e.start = a;
        e.end = b;
        e.dir = dir;
        e.length = len;
        g.edges.push_back(e);
        return e.id;
    };

    if (m == 2) {
        std::array<int, 2> pair{g.hull.sites[0], g.hull.sites[1]};
        Point a = g.hull.pts[0], b = g.hull.pts[1];
        Point mid = 0.5 * (a + b);
        Point d = normalized(perp(b - a));
        int nm = add_node(mid, {pair[0], pair[1]});
        g.infinity_node = add_node(std::nullopt, {});
        add_edge(pair, nm, g.infinity_node, d, std::nullopt);
        add_edge(pair, nm, g.infinity_node, -d, std::nullopt);
        return g;
    }

    // Faces of the farthest-point Delaunay triangulation of the hull.
    struct Face {
        std::array<int, 3> verts;  // hull positions, ascending
        Point center;
    };
    std::vector<Face> faces;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                Point pa = g.hull.pts[a], pb = g.hull.pts[b], pc = g.hull.pts[c];
                double orient = orientation(pa, pb, pc);
                bool face = true;
                for (int d = 0; d < m && face; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (orient * incircle(pa, pb, pc, g.hull.pts[d]) <= 0.0) face = false;
                }
                if (face) faces.push_back({{a, b, c}, circumcenter(pa, pb, pc)});
            }
    if (static_cast<int>(faces.size()) != m - 2)
        throw Error("farthest-point triangulation failed; input too close to degenerate");

    std::vector<int> face_node(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f)
        face_node[f] = add_node(faces[f].center,
                                {g.hull.sites[faces[f].verts[0]], g.hull.sites[faces[f].verts[1]],
                                 g.hull.sites[faces[f].verts[2]]});
    g.infinity_node = add_node(std::nullopt, {});

    std::map<std::pair<int, int>, std::vector<int>> by_chord;  // hull positions -> faces
    for (std::size_t f = 0; f < faces.size(); ++f) {
        auto [a, b, c] = faces[f].verts;
        by_chord[{a, b}].push_back(static_cast<int>(f));
        by_chord[{a, c}].push_back(static_cast<int>(f));
        by_chord[{b, c}].push_back(static_cast<int>(f));
    }

    for (const auto& [chord, fs] : by_chord) {
        std::array<int, 2> pair{g.hull.sites[chord.first], g.hull.sites[chord.second]};
        Point mid = 0.5 * (g.hull.pts[chord.first] + g.hull.pts[chord.second]);
        if (fs.size() == 2) {
            Point p0 = faces[fs[0]].center, p1 = faces[fs[1]].center;
            bool zero_first = distance(p0, mid) <= distance(p1, mid);
            Point a = zero_first ? p0 : p1;
            Point b = zero_first ? p1 : p0;
            int na = face_node[zero_first ? fs[0] : fs[1]];
            int nb = face_node[zero_first ? fs[1] : fs[0]];
            add_edge(pair, na, nb, normalized(b - a), distance(a, b));
        } else {
            // A chord on exactly one face is a hull edge; its dual edge runs
            // to infinity along the inward normal, where the pair stays
            // jointly farthest.
            bool hull_edge = (chord.second - chord.first == 1) ||
                             (chord.first == 0 && chord.second == m - 1);
            if (!hull_edge) throw Error("farthest-point triangulation chord mismatch");
            Point u = g.hull.pts[chord.first], v = g.hull.pts[chord.second];
            Point d = (chord.second - chord.first == 1) ? normalized(perp(v - u))
                                                        : normalized(perp(u - v));
            add_edge(pair, face_node[fs[0]], g.infinity_node, d, std::nullopt);
        }
    }
    return g;
}

/// The inverse image of a finite, non-center node under the center function:
/// the curvilinear triangle spanned by the three arcs through this node's
/// site pairs. Arcs run site to site on the far side of each chord.
inline std::vector<Arc> node_inverse_region(const FvbGraph& g, int node_id) {
    const FvbNode& n = g.node(node_id);
    if (!n.finite()) throw NotApplicable("infinity node has no arc-bounded inverse region");
    if (n.sites.size() != 3)
        throw NotApplicable("node is not the meet of three edges");
    if (distance(*n.pos, g.mec.center) <= kDistanceTol)
        throw NotApplicable("center node: inverse region is the residual region");
    std::vector<Arc> arcs;
    const std::array<std::array<int, 2>, 3> pairs{{{n.sites[0], n.sites[1]},
                                                   {n.sites[0], n.sites[2]},
                                                   {n.sites[1], n.sites[2]}}};
    for (auto pr : pairs) {
        Point xi = g.site(pr[0]), xj = g.site(pr[1]);
        Point k = circumcenter(*n.pos, xi, xj);
        arcs.push_back(arc_avoiding(k, distance(k, xi), xi, xj, *n.pos));
    }
    return arcs;
}

}  // namespace dwmec
