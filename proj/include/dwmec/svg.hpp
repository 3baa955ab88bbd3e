#pragma once

#include <string>

#include "dwmec/center_function.hpp"

namespace dwmec {

namespace svgdetail {

inline void num(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v + 0.0);  // normalize -0
    out += buf;
}

inline void xy(std::string& out, Point p) {
    num(out, p.x);
    out += ' ';
    num(out, -p.y);  // svg y axis points down
}

/// Path arc command following the mathematical parametrization: sweep > 0 is
/// counterclockwise in plane coordinates, which maps to sweep-flag 0 once the
/// y axis is flipped.
inline void arc_to(std::string& out, const Arc& a, bool reversed) {
    Point end = a.at(reversed ? 0.0 : 1.0);
    out += "A ";
    num(out, a.radius);
    out += ' ';
    num(out, a.radius);
    out += " 0 ";
    out += a.sweep > M_PI ? '1' : '0';
    out += ' ';
    out += reversed ? '1' : '0';
    out += ' ';
    xy(out, end);
    out += ' ';
}

struct Style {
    const char* node_fill = "#cfe3f7";
    const char* edge_fill = "#d9f1d4";
    const char* infinity_fill = "#fbe8c9";
    const char* graph_stroke = "#1f3d7a";
    const char* hull_stroke = "#888888";
    const char* arc_stroke = "#b05a7a";
};

}  // namespace svgdetail

/// Renders the boundary graph and the plane division. The viewport spans
/// four hull bounding boxes; regions are filled per label class, the graph
/// is drawn dash-dot, hull and boundary arcs solid.
inline std::string render_svg(const Solver& solver, const PlaneDivision& division,
                              std::optional<Point> weight_point = std::nullopt,
                              double canvas = 640.0) {
    using svgdetail::num;
    using svgdetail::xy;
    const SiteSet& sites = solver.sites();
    const DivisionTree& tree = solver.tree();
    svgdetail::Style style;

    Point lo = sites.original_site(solver.graph().hull.sites[0]);
    Point hi = lo;
    for (int sid : solver.graph().hull.sites) {
        Point v = sites.original_site(sid);
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
    }
    Point center = 0.5 * (lo + hi);
    double half = 2.0 * std::max({hi.x - lo.x, hi.y - lo.y, 1e-9});
    double reach = 4.0 * half;  // long enough to leave the viewport

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
    num(s, canvas);
    s += "\" height=\"";
    num(s, canvas);
    s += "\" viewBox=\"";
    num(s, center.x - half);
    s += ' ';
    num(s, -center.y - half);
    s += ' ';
    num(s, 2 * half);
    s += ' ';
    num(s, 2 * half);
    s += "\">\n";

    auto fill_for = [&](RegionKind k) {
        switch (k) {
            case RegionKind::node: return style.node_fill;
            case RegionKind::edge: return style.edge_fill;
            default: return style.infinity_fill;
        }
    };

    // Background carries the class of the residual region around the root:
    // node class for a three-child root, edge class otherwise.
    bool root_has_region =
        tree.children[static_cast<std::size_t>(tree.root)].size() == 3;
    s += "<rect x=\"";
    num(s, center.x - half);
    s += "\" y=\"";
    num(s, -center.y - half);
    s += "\" width=\"";
    num(s, 2 * half);
    s += "\" height=\"";
    num(s, 2 * half);
    s += "\" fill=\"";
    s += root_has_region ? style.node_fill : style.edge_fill;
    s += "\"/>\n";

    // Region fills, shallow structure first so finer regions repaint over
    // their surroundings; the hull interior goes last.
    auto region_depth = [&](const Region& r) {
        if (r.kind == RegionKind::infinity) return 1000;
        if (r.kind == RegionKind::node) {
            if (r.id == tree.root) return -1;  // painted as background
            for (const DtEdge& e : tree.edges)
                if (e.child == r.id) return e.depth + 1;
            return 0;
        }
        int d = 1000;
        for (const DtEdge& e : tree.edges)
            if (e.fvb_edge == r.id) d = std::min(d, e.depth);
        return d;
    };
    std::vector<const Region*> order;
    for (const Region& r : division.regions) order.push_back(&r);
    std::stable_sort(order.begin(), order.end(), [&](const Region* a, const Region* b) {
        return region_depth(*a) < region_depth(*b);
    });

    auto half_plane_path = [&](const Line& l) {
        // Big quad covering the half plane on the side away from the hull
        // center; the viewport clips it.
        Point n = perp(l.dir);
        if (dot(center - l.point, n) > 0) n = -n;
        Point a = l.point - reach * l.dir, b = l.point + reach * l.dir;
        std::string d = "M ";
        xy(d, a);
        d += " L ";
        xy(d, b);
        d += " L ";
        xy(d, b + reach * n);
        d += " L ";
        xy(d, a + reach * n);
        d += " Z";
        return d;
    };

    for (const Region* rp : order) {
        const Region& r = *rp;
        if (r.degenerate || region_depth(r) < 0) continue;
        std::string d;
        if (r.kind == RegionKind::infinity) {
            d = "M ";
            bool first = true;
            for (const BoundaryPrimitive& prim : r.boundary) {
                const Segment& seg = std::get<Segment>(prim);
                if (first) {
                    xy(d, seg.a);
                    first = false;
                }
                d += " L ";
                xy(d, seg.b);
            }
            d += " Z";
        } else if (r.kind == RegionKind::node && r.id == tree.root) {
            continue;  // painted as the background
        } else {
            // Chain arcs, segments and at most one half-plane line into a
            // closed path. Regions here are arch-like or arc triangles.
            const Line* line = nullptr;
            std::vector<const Arc*> arcs;
            std::vector<const Segment*> segs;
            for (const BoundaryPrimitive& prim : r.boundary) {
                if (const Arc* a = std::get_if<Arc>(&prim)) arcs.push_back(a);
                else if (const Segment* sg = std::get_if<Segment>(&prim)) segs.push_back(sg);
                else line = &std::get<Line>(prim);
            }
            if (line && arcs.empty()) {
                d = half_plane_path(*line);
            } else if (line) {
                // half plane minus the arch beyond the chord: paint the half
                // plane; the arch is repainted by deeper regions
                d = half_plane_path(*line);
            } else if (!arcs.empty()) {
                // chain primitives end to end into a closed path
                std::vector<bool> arc_used(arcs.size(), false);
                std::vector<bool> seg_used(segs.size(), false);
                Point start = arcs[0]->at(0.0);
                Point cur = arcs[0]->at(1.0);
                d = "M ";
                xy(d, start);
                d += ' ';
                svgdetail::arc_to(d, *arcs[0], false);
                arc_used[0] = true;
                bool progressed = true;
                while (progressed && distance(cur, start) > 1e-7) {
                    progressed = false;
                    for (std::size_t i = 0; i < arcs.size() && !progressed; ++i) {
                        if (arc_used[i]) continue;
                        Point a0 = arcs[i]->at(0.0), a1 = arcs[i]->at(1.0);
                        if (distance(a0, cur) < 1e-7 || distance(a1, cur) < 1e-7) {
                            bool rev = distance(a1, cur) < 1e-7;
                            svgdetail::arc_to(d, *arcs[i], rev);
                            cur = rev ? a0 : a1;
                            arc_used[i] = true;
                            progressed = true;
                        }
                    }
                    for (std::size_t i = 0; i < segs.size() && !progressed; ++i) {
                        if (seg_used[i]) continue;
                        if (distance(segs[i]->a, cur) < 1e-7 ||
                            distance(segs[i]->b, cur) < 1e-7) {
                            Point next =
                                distance(segs[i]->a, cur) < 1e-7 ? segs[i]->b : segs[i]->a;
                            d += "L ";
                            xy(d, next);
                            d += ' ';
                            cur = next;
                            seg_used[i] = true;
                            progressed = true;
                        }
                    }
                }
                d += "Z";
            }
        }
        if (d.empty()) continue;
        s += "<path d=\"";
        s += d;
        s += "\" fill=\"";
        s += fill_for(r.kind);
        s += "\" stroke=\"";
        s += style.arc_stroke;
        s += "\" stroke-width=\"";
        num(s, half / 400);
        s += "\"/>\n";
    }

    // hull outline
    s += "<path d=\"M ";
    for (int i = 0; i < solver.graph().hull.size(); ++i) {
        if (i) s += " L ";
        xy(s, sites.to_original(solver.graph().hull.pts[static_cast<std::size_t>(i)]));
    }
    s += " Z\" fill=\"none\" stroke=\"";
    s += style.hull_stroke;
    s += "\" stroke-width=\"";
    num(s, half / 300);
    s += "\"/>\n";

    // boundary graph, dash-dot
    for (const FvbEdge& e : solver.graph().edges) {
        Point a = sites.to_original(*solver.graph().node(e.start).pos);
        Point b = e.bounded()
                      ? sites.to_original(*solver.graph().node(e.start).pos +
                                          *e.length * e.dir)
                      : a + reach * e.dir;
        s += "<path d=\"M ";
        xy(s, a);
        s += " L ";
        xy(s, b);
        s += "\" fill=\"none\" stroke=\"";
        s += style.graph_stroke;
        s += "\" stroke-width=\"";
        num(s, half / 250);
        s += "\" stroke-dasharray=\"";
        num(s, half / 30);
        s += ' ';
        num(s, half / 80);
        s += ' ';
        num(s, half / 160);
        s += ' ';
        num(s, half / 80);
        s += "\"/>\n";
    }

    // sites
    for (Point v : sites.originals()) {
        s += "<circle cx=\"";
        num(s, v.x);
        s += "\" cy=\"";
        num(s, -v.y);
        s += "\" r=\"";
        num(s, half / 90);
        s += "\" fill=\"#222222\"/>\n";
    }
    if (weight_point) {
        s += "<circle cx=\"";
        num(s, weight_point->x);
        s += "\" cy=\"";
        num(s, -weight_point->y);
        s += "\" r=\"";
        num(s, half / 90);
        s += "\" fill=\"#c62828\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace dwmec
