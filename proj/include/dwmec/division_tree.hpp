#pragma once

#include <deque>
#include <set>

#include "dwmec/fvd.hpp"

namespace dwmec {

struct DtEdge {
    int id = -1;
    std::array<int, 2> sites{};
    int parent = -1;                 // parent node (nearer the chord)
    int child = -1;                  // child node, possibly the infinity node
    Point dir;                       // unit vector parent -> child
    std::optional<double> length;    // nullopt: unbounded
    int depth = 0;                   // depth of the child node
    int fvb_edge = -1;               // originating edge in the boundary graph

    bool bounded() const { return length.has_value(); }
};

struct SplitRecord {
    int original_edge = -1;          // boundary-graph edge the center fell on
    std::array<int, 2> halves{};     // replacement tree edge ids
};

/// The boundary graph re-rooted at the enclosing-circle center. When the
/// center falls strictly inside an edge, that edge is split there and the
/// split point becomes the root. Edge depth equals the depth of its child
/// node; every leaf lies at infinity.
struct DivisionTree {
    std::vector<FvbNode> nodes;             // graph nodes plus a root node if split
    std::vector<DtEdge> edges;
    std::vector<std::vector<int>> children; // per node id: child edge ids
    int root = -1;
    int infinity_node = -1;
    int depth = 0;                          // D: maximum edge depth
    std::optional<SplitRecord> split;
    Circle mec;                             // normalized frame
    ConvexHull hull;
    std::vector<Point> site_pts;            // normalized, indexed by site id

    const FvbNode& node(int id) const { return nodes[static_cast<std::size_t>(id)]; }
    const DtEdge& edge(int id) const { return edges[static_cast<std::size_t>(id)]; }
    Point site(int id) const { return site_pts[static_cast<std::size_t>(id)]; }
    Point chord_midpoint(const DtEdge& e) const {
        return 0.5 * (site(e.sites[0]) + site(e.sites[1]));
    }
    Point root_pos() const { return *node(root).pos; }

    /// Sites named by at least one edge label.
    std::vector<int> involved_sites() const {
        std::set<int> ids;
        for (const DtEdge& e : edges) {
            ids.insert(e.sites[0]);
            ids.insert(e.sites[1]);
        }
        return {ids.begin(), ids.end()};
    }
};

inline DivisionTree build_division_tree(const FvbGraph& g) {
    DivisionTree t;
    t.nodes = g.nodes;
    t.infinity_node = g.infinity_node;
    t.mec = g.mec;
    t.hull = g.hull;
    t.site_pts = g.site_pts;
    const Point eps = g.mec.center;

    // Locate the center on the graph: a node within snapping tolerance wins,
    // otherwise the edge whose interior carries it is split there.
    int root = -1;
    for (const FvbNode& n : g.nodes)
        if (n.finite() && distance(*n.pos, eps) <= kDistanceTol) { root = n.id; break; }

    struct Half {
        std::array<int, 2> sites;
        int far_node;
        Point dir;
        std::optional<double> length;
        int fvb_edge;
    };
    std::vector<Half> split_halves;
    int split_edge = -1;
    if (root < 0) {
        for (const FvbEdge& e : g.edges) {
            Point a = *g.node(e.start).pos;
            double along = dot(eps - a, e.dir);
            double off = std::abs(cross(e.dir, eps - a));
            if (off > kDistanceTol || along <= kDistanceTol) continue;
            if (e.bounded() && along >= *e.length - kDistanceTol) continue;
            split_edge = e.id;
            root = static_cast<int>(t.nodes.size());
            FvbNode rn;
            rn.id = root;
            rn.pos = eps;
            rn.sites = {e.sites[0], e.sites[1]};
            t.nodes.push_back(rn);
            split_halves.push_back({e.sites, e.start, -e.dir, along, e.id});
            if (e.bounded())
                split_halves.push_back({e.sites, e.end, e.dir, *e.length - along, e.id});
            else
                split_halves.push_back({e.sites, e.end, e.dir, std::nullopt, e.id});
            break;
        }
    }
    if (root < 0) throw Error("enclosing-circle center not found on the boundary graph");
    t.root = root;

    auto add_edge = [&](std::array<int, 2> pair, int parent, int child, Point dir,
                        std::optional<double> len, int depth, int origin) {
        DtEdge e;
        e.id = static_cast<int>(t.edges.size());
        e.sites = pair;
        e.parent = parent;
        e.child = child;
        e.dir = dir;
        e.length = len;
        e.depth = depth;
        e.fvb_edge = origin;
        t.edges.push_back(e);
        t.children[static_cast<std::size_t>(parent)].push_back(e.id);
        return e.id;
    };

    t.children.assign(t.nodes.size(), {});
    std::vector<int> node_depth(t.nodes.size(), -1);
    node_depth[static_cast<std::size_t>(root)] = 0;
    std::deque<int> queue;

    if (split_edge >= 0) {
        SplitRecord rec;
        rec.original_edge = split_edge;
        for (std::size_t k = 0; k < split_halves.size(); ++k) {
            const Half& h = split_halves[k];
            rec.halves[k] = add_edge(h.sites, root, h.far_node, h.dir, h.length, 1, h.fvb_edge);
            if (t.node(h.far_node).finite()) {
                node_depth[static_cast<std::size_t>(h.far_node)] = 1;
                queue.push_back(h.far_node);
            }
        }
        t.split = rec;
    } else {
        queue.push_back(root);
    }

    while (!queue.empty()) {
        int nid = queue.front();
        queue.pop_front();
        int d = node_depth[static_cast<std::size_t>(nid)];
        for (const FvbEdge& e : g.edges) {
            if (e.id == split_edge) continue;
            int other;
            Point dir;
            if (e.start == nid) { other = e.end; dir = e.dir; }
            else if (e.end == nid) { other = e.start; dir = -e.dir; }
            else continue;
            if (other != g.infinity_node && node_depth[static_cast<std::size_t>(other)] >= 0)
                continue;  // already oriented from the root side
            add_edge(e.sites, nid, other, dir, e.length, d + 1, e.id);
            if (other != g.infinity_node) {
                node_depth[static_cast<std::size_t>(other)] = d + 1;
                queue.push_back(other);
            }
        }
    }

    for (const DtEdge& e : t.edges) {
        t.depth = std::max(t.depth, e.depth);
        // Orientation invariant: the parent sits nearer the labeling chord.
        Point mid = t.chord_midpoint(e);
        double dp = distance(*t.node(e.parent).pos, mid);
        double dc = e.child == t.infinity_node
                        ? std::numeric_limits<double>::infinity()
                        : distance(*t.node(e.child).pos, mid);
        if (dp > dc + kDistanceTol)
            throw Error("division tree orientation violated on an edge");
    }
    return t;
}

/// Cuts the tree at depth d. Edges deeper than d disappear; a bounded edge of
/// depth exactly d is extended to infinity along its own direction, so all
/// leaves stay at infinity. The result is the division tree of the site
/// subset still involved in the kept edges.
inline DivisionTree truncate(const DivisionTree& t, int d) {
    if (d < 0 || d > t.depth) throw DepthOutOfRange("truncation depth outside [0, D]");

    DivisionTree out;
    out.mec = t.mec;
    out.hull = t.hull;
    out.site_pts = t.site_pts;
    out.depth = 0;

    std::vector<int> remap(t.nodes.size(), -1);
    auto keep_node = [&](int id) {
        if (remap[static_cast<std::size_t>(id)] < 0) {
            FvbNode n = t.node(id);
            n.id = static_cast<int>(out.nodes.size());
            remap[static_cast<std::size_t>(id)] = n.id;
            out.nodes.push_back(n);
        }
        return remap[static_cast<std::size_t>(id)];
    };

    out.root = keep_node(t.root);
    out.infinity_node = keep_node(t.infinity_node);

    std::vector<int> edge_remap(t.edges.size(), -1);
    for (const DtEdge& e : t.edges) {
        if (e.depth > d) continue;
        DtEdge ne = e;
        ne.id = static_cast<int>(out.edges.size());
        edge_remap[static_cast<std::size_t>(e.id)] = ne.id;
        ne.parent = keep_node(e.parent);
        bool cut = e.depth == d && e.child != t.infinity_node;
        if (cut) {
            ne.child = out.infinity_node;
            ne.length = std::nullopt;
        } else {
            ne.child = keep_node(e.child);
        }
        out.edges.push_back(ne);
        out.depth = std::max(out.depth, ne.depth);
    }

    out.children.assign(out.nodes.size(), {});
    for (const DtEdge& e : out.edges)
        out.children[static_cast<std::size_t>(e.parent)].push_back(e.id);

    if (t.split && d >= 1) {
        SplitRecord rec;
        rec.original_edge = t.split->original_edge;
        rec.halves = {edge_remap[static_cast<std::size_t>(t.split->halves[0])],
                      edge_remap[static_cast<std::size_t>(t.split->halves[1])]};
        out.split = rec;
    }
    return out;
}

}  // namespace dwmec
