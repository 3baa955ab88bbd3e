#pragma once

#include <map>
#include <variant>

#include "dwmec/edge_solver.hpp"

namespace dwmec {

enum class LocusKind { node, edge_interior, infinity };

/// Where the optimizer sits. Node ids refer to the division tree (which
/// extends the graph node list by the split root when the enclosing-circle
/// center fell inside an edge); edge ids refer to the boundary graph, with
/// the offset measured from that edge's start node in the input frame.
struct Locus {
    LocusKind kind = LocusKind::node;
    int node = -1;
    int edge = -1;
    double offset = 0.0;
    std::optional<Point> point;  // input frame; nullopt at infinity
};

inline bool locus_less(const Locus& a, const Locus& b) {
    auto key = [](const Locus& l) {
        return std::tuple(static_cast<int>(l.kind), l.node, l.edge, l.offset);
    };
    return key(a) < key(b);
}

/// Result of the global problem. At infinity the value 1 is the supremum of
/// the objective, approached but not attained by finite points.
struct Solution {
    Locus locus;
    double value = 0.0;
    bool unique = true;
    std::vector<Locus> ties;  // further optima when unique is false
};

struct DescentStats {
    int levels = 0;  // tree levels examined, at most D + 1
};

enum class RegionKind { node, edge, infinity };

using BoundaryPrimitive = std::variant<Arc, Segment, Line>;

struct Region {
    RegionKind kind = RegionKind::infinity;
    int id = -1;             // tree node id or boundary-graph edge id
    bool degenerate = false; // measure-zero region (two-vertex hull)
    std::vector<BoundaryPrimitive> boundary;  // input frame
};

struct PlaneDivision {
    int m = 0;
    std::vector<Region> regions;

    /// Number of full-dimensional regions; the bound is 3m - 4.
    int count() const {
        int n = 0;
        for (const Region& r : regions) n += r.degenerate ? 0 : 1;
        return n;
    }
};

namespace detail {

inline bool in_triangle_closed(Point a, Point b, Point c, Point p) {
    double s1 = orientation(a, b, p);
    double s2 = orientation(b, c, p);
    double s3 = orientation(c, a, p);
    return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

}  // namespace detail

/// Owns the validated sites, the boundary graph and the division tree, and
/// answers weight-point queries against them. Everything is immutable after
/// construction, so one instance may serve many queries concurrently.
class Solver {
  public:
    explicit Solver(SiteSet sites, double tol = kPredicateTol)
        : sites_(std::move(sites)),
          graph_(build_fvb(sites_, tol)),
          tree_(build_division_tree(graph_)) {
        frames_.reserve(tree_.edges.size());
        for (const DtEdge& e : tree_.edges) frames_.push_back(make_frame(e, tree_));
    }

    const SiteSet& sites() const { return sites_; }
    const FvbGraph& graph() const { return graph_; }
    const DivisionTree& tree() const { return tree_; }
    const EdgeFrame& frame(int tree_edge) const {
        return frames_[static_cast<std::size_t>(tree_edge)];
    }
    Circle mec() const {
        return {sites_.to_original(graph_.mec.center), graph_.mec.radius / sites_.scale()};
    }

    double evaluate(Point x, Point p) const { return evaluate_objective(x, sites_, p); }

    Solution solve(Point p) const { return solve_by_traversal(p); }

    /// Runs the closed-form single-edge optimizer on every tree edge and
    /// keeps the best location; the linear-time baseline.
    Solution solve_by_traversal(Point p) const {
        Point pn = sites_.to_normalized(p);
        reject_vertex_coincidence(pn);

        struct Cand {
            Locus locus;       // normalized point inside
            double value;
        };
        std::vector<Cand> cands;
        bool has_infinity = false;
        std::map<int, bool> node_seen;

        auto add = [&](const DtEdge& e, EdgeSolutionKind kind, double offset) {
            switch (kind) {
                case EdgeSolutionKind::start_node:
                case EdgeSolutionKind::end_node: {
                    int nid = kind == EdgeSolutionKind::start_node ? e.parent : e.child;
                    if (node_seen[nid]) return;
                    node_seen[nid] = true;
                    Point pos = *tree_.node(nid).pos;
                    cands.push_back({Locus{LocusKind::node, nid, -1, 0.0, pos},
                                     evaluate_objective_normalized(pos, tree_.site_pts, pn)});
                    break;
                }
                case EdgeSolutionKind::interior: {
                    Point pos = frames_[static_cast<std::size_t>(e.id)].point_at(offset);
                    for (const Cand& c : cands)
                        if (c.locus.kind == LocusKind::edge_interior &&
                            c.locus.edge == e.fvb_edge &&
                            std::abs(c.locus.offset - fvb_offset(e, offset)) <= kDistanceTol)
                            return;
                    cands.push_back(
                        {Locus{LocusKind::edge_interior, -1, e.fvb_edge, fvb_offset(e, offset), pos},
                         evaluate_objective_normalized(pos, tree_.site_pts, pn)});
                    break;
                }
                case EdgeSolutionKind::infinity:
                    has_infinity = true;
                    break;
            }
        };

        for (const DtEdge& e : tree_.edges) {
            EdgeClassification c = classify(frames_[static_cast<std::size_t>(e.id)], pn);
            add(e, c.sol.kind, c.sol.offset);
            if (c.sol.tie) add(e, c.sol.tie->first, c.sol.tie->second);
        }
        if (has_infinity)
            cands.push_back({Locus{LocusKind::infinity, -1, -1, 0.0, std::nullopt}, 1.0});

        double best = 0.0;
        for (const Cand& c : cands) best = std::max(best, c.value);
        std::vector<Locus> tied;
        for (const Cand& c : cands)
            if (c.value >= best - kDistanceTol) tied.push_back(c.locus);
        std::sort(tied.begin(), tied.end(), locus_less);

        Solution s;
        s.value = best;
        s.unique = tied.size() == 1;
        s.locus = to_original_locus(tied.front());
        for (std::size_t i = 1; i < tied.size(); ++i)
            s.ties.push_back(to_original_locus(tied[i]));
        return s;
    }

    /// Walks the division tree from the root, at each level testing the
    /// weight point against the arch subdivision of the current dominant
    /// region and entering at most one subtree.
    Solution solve_by_descent(Point p, DescentStats* stats = nullptr) const {
        Point pn = sites_.to_normalized(p);
        reject_vertex_coincidence(pn);
        DescentStats local;
        DescentStats& st = stats ? *stats : local;
        st.levels = 1;

        Point root_pos = tree_.root_pos();
        for (int eid : tree_.children[static_cast<std::size_t>(tree_.root)]) {
            const DtEdge& e = tree_.edge(eid);
            if (arch_contains(root_pos, tree_.site(e.sites[0]), tree_.site(e.sites[1]), e.dir, pn))
                return descend(e, pn, st);
        }
        if (point_in_hull(tree_.hull, pn)) return infinity_solution();
        return node_solution(tree_.root, pn);
    }

    PlaneDivision enumerate_regions() const;
    bool region_contains(const Region& r, Point p_original) const;

  private:
    void reject_vertex_coincidence(Point pn) const {
        for (std::size_t k = 0; k < graph_.hull.sites.size(); ++k)
            if (distance(pn, graph_.hull.pts[k]) <= kDistanceTol)
                throw VertexCoincidence(graph_.hull.sites[k],
                                        graph_.cell_edges(graph_.hull.sites[k]));
    }

    /// Offset along the originating boundary-graph edge, normalized frame.
    double fvb_offset(const DtEdge& e, double offset) const {
        const FvbEdge& fe = graph_.edge(e.fvb_edge);
        if (!tree_.split || (tree_.split->halves[0] != e.id && tree_.split->halves[1] != e.id))
            return offset;
        Point start = *graph_.node(fe.start).pos;
        double t_split = dot(tree_.root_pos() - start, fe.dir);
        return dot(e.dir, fe.dir) > 0 ? t_split + offset : t_split - offset;
    }

    Locus to_original_locus(Locus l) const {
        if (l.point) l.point = sites_.to_original(*l.point);
        l.offset /= sites_.scale();
        return l;
    }

    Solution infinity_solution() const {
        Solution s;
        s.locus = {LocusKind::infinity, -1, -1, 0.0, std::nullopt};
        s.value = 1.0;
        return s;
    }

    Solution node_solution(int node_id, Point pn) const {
        Point pos = *tree_.node(node_id).pos;
        Solution s;
        s.locus = to_original_locus({LocusKind::node, node_id, -1, 0.0, pos});
        s.value = evaluate_objective_normalized(pos, tree_.site_pts, pn);
        return s;
    }

    Solution interior_solution(const DtEdge& e, double offset, Point pn) const {
        Point pos = frames_[static_cast<std::size_t>(e.id)].point_at(offset);
        Solution s;
        s.locus = to_original_locus(
            {LocusKind::edge_interior, -1, e.fvb_edge, fvb_offset(e, offset), pos});
        s.value = evaluate_objective_normalized(pos, tree_.site_pts, pn);
        return s;
    }

    Solution descend(const DtEdge& e, Point pn, DescentStats& st) const {
        ++st.levels;
        const EdgeFrame& f = frames_[static_cast<std::size_t>(e.id)];
        Point xi = tree_.site(e.sites[0]), xj = tree_.site(e.sites[1]);

        if (e.child == tree_.infinity_node) {
            auto lam = coefficients(f, pn).stationary;
            if (!lam || *lam <= kDistanceTol) return node_solution(e.parent, pn);
            return interior_solution(e, *lam, pn);
        }

        const FvbNode& far = tree_.node(e.child);
        int xk_id = -1;
        for (int sid : far.sites)
            if (sid != e.sites[0] && sid != e.sites[1]) xk_id = sid;
        Point xk = tree_.site(xk_id);
        Point far_pos = *far.pos;

        if (detail::in_triangle_closed(xi, xj, xk, pn)) return infinity_solution();

        for (int ceid : tree_.children[static_cast<std::size_t>(e.child)]) {
            const DtEdge& ce = tree_.edge(ceid);
            if (arch_contains(far_pos, tree_.site(ce.sites[0]), tree_.site(ce.sites[1]),
                              ce.dir, pn))
                return descend(ce, pn, st);
        }
        if (!arch_contains(far_pos, xi, xj, e.dir, pn)) {
            auto lam = coefficients(f, pn).stationary;
            if (!lam || *lam <= kDistanceTol) return node_solution(e.parent, pn);
            if (*lam >= *e.length - kDistanceTol) return node_solution(e.child, pn);
            return interior_solution(e, *lam, pn);
        }
        return node_solution(e.child, pn);
    }

    SiteSet sites_;
    FvbGraph graph_;
    DivisionTree tree_;
    std::vector<EdgeFrame> frames_;
};

// --- plane division ---------------------------------------------------------

inline PlaneDivision Solver::enumerate_regions() const {
    PlaneDivision out;
    out.m = graph_.hull.size();
    const int m = out.m;
    auto orig = [&](Point q) { return sites_.to_original(q); };
    auto orig_arc = [&](Arc a) {
        return Arc{orig(a.center), a.radius / sites_.scale(), a.begin_angle, a.sweep};
    };

    Region inf;
    inf.kind = RegionKind::infinity;
    inf.degenerate = m == 2;
    for (int i = 0; i < m; ++i)
        inf.boundary.push_back(
            Segment{orig(graph_.hull.pts[static_cast<std::size_t>(i)]),
                    orig(graph_.hull.pts[static_cast<std::size_t>((i + 1) % m)])});
    if (m == 2) inf.boundary.pop_back();  // one segment covers the two-vertex hull
    out.regions.push_back(inf);

    auto child_arc = [&](const DtEdge& e) {
        Point xi = tree_.site(e.sites[0]), xj = tree_.site(e.sites[1]);
        Point o = *tree_.node(e.child).pos;
        Point k = circumcenter(o, xi, xj);
        return orig_arc(arc_avoiding(k, distance(k, xi), xi, xj, o));
    };
    auto parent_arc = [&](const DtEdge& e) {
        Point xi = tree_.site(e.sites[0]), xj = tree_.site(e.sites[1]);
        Point o = *tree_.node(e.parent).pos;
        Point k = circumcenter(o, xi, xj);
        return orig_arc(arc_avoiding(k, distance(k, xi), xi, xj, o));
    };
    auto chord_gamma = [&](const DtEdge& e) {
        return distance(*tree_.node(e.parent).pos, tree_.chord_midpoint(e));
    };

    if (tree_.split) {
        Region r;
        r.kind = RegionKind::edge;
        r.id = tree_.split->original_edge;
        const DtEdge& h0 = tree_.edge(tree_.split->halves[0]);
        Point xi = tree_.site(h0.sites[0]), xj = tree_.site(h0.sites[1]);
        r.boundary.push_back(Segment{orig(xi), orig(xj)});
        for (int hid : tree_.split->halves) {
            const DtEdge& h = tree_.edge(hid);
            if (h.child != tree_.infinity_node) r.boundary.push_back(child_arc(h));
        }
        out.regions.push_back(r);
    }

    for (const DtEdge& e : tree_.edges) {
        if (tree_.split &&
            (tree_.split->halves[0] == e.id || tree_.split->halves[1] == e.id))
            continue;
        Region r;
        r.kind = RegionKind::edge;
        r.id = e.fvb_edge;
        Point xi = tree_.site(e.sites[0]), xj = tree_.site(e.sites[1]);
        bool on_chord = chord_gamma(e) <= kDistanceTol;
        if (on_chord) {
            r.boundary.push_back(Line{orig(0.5 * (xi + xj)), normalized(xj - xi)});
        } else {
            r.boundary.push_back(parent_arc(e));
            if (e.child == tree_.infinity_node)
                r.boundary.push_back(Segment{orig(xi), orig(xj)});
        }
        if (e.child != tree_.infinity_node) r.boundary.push_back(child_arc(e));
        out.regions.push_back(r);
    }

    for (const FvbNode& n : tree_.nodes) {
        if (!n.finite() || n.id == tree_.root) continue;
        Region r;
        r.kind = RegionKind::node;
        r.id = n.id;
        for (const Arc& a : node_inverse_region(graph_, n.id)) r.boundary.push_back(orig_arc(a));
        out.regions.push_back(r);
    }

    const auto& root_children = tree_.children[static_cast<std::size_t>(tree_.root)];
    if (root_children.size() == 3) {
        Region r;
        r.kind = RegionKind::node;
        r.id = tree_.root;
        for (int eid : root_children) {
            const DtEdge& e = tree_.edge(eid);
            Point xi = tree_.site(e.sites[0]), xj = tree_.site(e.sites[1]);
            if (chord_gamma(e) <= kDistanceTol)
                r.boundary.push_back(Line{orig(0.5 * (xi + xj)), normalized(xj - xi)});
            else
                r.boundary.push_back(parent_arc(e));
        }
        out.regions.push_back(r);
    }
    return out;
}

inline bool Solver::region_contains(const Region& r, Point p_original) const {
    Point pn = sites_.to_normalized(p_original);
    switch (r.kind) {
        case RegionKind::infinity:
            return point_in_hull(tree_.hull, pn);
        case RegionKind::edge: {
            for (const DtEdge& e : tree_.edges) {
                if (e.fvb_edge != r.id) continue;
                if (dominant_region_contains(e, tree_, pn)) return true;
            }
            // Merged region: the chord line outside the closed segment also
            // belongs to it (the seam through the root).
            if (tree_.split && tree_.split->original_edge == r.id) {
                const DtEdge& h = tree_.edge(tree_.split->halves[0]);
                Point xi = tree_.site(h.sites[0]), xj = tree_.site(h.sites[1]);
                Point d = normalized(xj - xi);
                if (std::abs(cross(d, pn - xi)) <= kDistanceTol) {
                    double t = dot(pn - xi, d);
                    return t < -kDistanceTol || t > distance(xi, xj) + kDistanceTol;
                }
            }
            return false;
        }
        case RegionKind::node: {
            if (r.id == tree_.root) {
                if (point_in_hull(tree_.hull, pn)) return false;
                for (int eid : tree_.children[static_cast<std::size_t>(tree_.root)]) {
                    const DtEdge& e = tree_.edge(eid);
                    if (arch_contains(tree_.root_pos(), tree_.site(e.sites[0]),
                                      tree_.site(e.sites[1]), e.dir, pn))
                        return false;
                }
                return true;
            }
            // Interior node: inside the arch of the parent edge seen from
            // this node, outside the face triangle and both child arches.
            const DtEdge* parent_edge = nullptr;
            for (const DtEdge& e : tree_.edges)
                if (e.child == r.id) parent_edge = &e;
            if (!parent_edge) return false;
            Point xi = tree_.site(parent_edge->sites[0]);
            Point xj = tree_.site(parent_edge->sites[1]);
            Point npos = *tree_.node(r.id).pos;
            if (!arch_contains(npos, xi, xj, parent_edge->dir, pn)) return false;
            int xk_id = -1;
            for (int sid : tree_.node(r.id).sites)
                if (sid != parent_edge->sites[0] && sid != parent_edge->sites[1]) xk_id = sid;
            if (detail::in_triangle_closed(xi, xj, tree_.site(xk_id), pn)) return false;
            for (int ceid : tree_.children[static_cast<std::size_t>(r.id)]) {
                const DtEdge& ce = tree_.edge(ceid);
                if (arch_contains(npos, tree_.site(ce.sites[0]), tree_.site(ce.sites[1]),
                                  ce.dir, pn))
                    return false;
            }
            return true;
        }
    }
    return false;
}

// --- free-function forms ----------------------------------------------------

inline Solution solve(const SiteSet& sites, Point p) { return Solver(sites).solve(p); }

inline Solution solve_by_traversal(const SiteSet& sites, Point p) {
    return Solver(sites).solve_by_traversal(p);
}

inline Solution solve_by_descent(const SiteSet& sites, Point p, DescentStats* stats = nullptr) {
    return Solver(sites).solve_by_descent(p, stats);
}

inline PlaneDivision enumerate_regions(const SiteSet& sites) {
    return Solver(sites).enumerate_regions();
}

}  // namespace dwmec
