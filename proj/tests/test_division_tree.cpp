#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace dwmec;
using testsupport::rng;

namespace {

/// Structural equality of two division trees up to node relabeling: same
/// root position, and the same multiset of edges keyed by geometry (parent
/// position, direction, length, site-pair positions), everything compared in
/// a shared frame.
bool trees_match(const DivisionTree& a, const SiteSet& sa, const DivisionTree& b,
                 const SiteSet& sb, double tol = 1e-6) {
    if (distance(sa.to_original(a.root_pos()), sb.to_original(b.root_pos())) > tol)
        return false;
    if (a.edges.size() != b.edges.size()) return false;
    std::vector<bool> used(b.edges.size(), false);
    for (const DtEdge& ea : a.edges) {
        Point pa = sa.to_original(*a.node(ea.parent).pos);
        Point ma = sa.to_original(a.chord_midpoint(ea));
        double la = ea.bounded() ? *ea.length / sa.scale() : -1.0;
        bool found = false;
        for (std::size_t j = 0; j < b.edges.size() && !found; ++j) {
            if (used[j]) continue;
            const DtEdge& eb = b.edges[j];
            Point pb = sb.to_original(*b.node(eb.parent).pos);
            Point mb = sb.to_original(b.chord_midpoint(eb));
            double lb = eb.bounded() ? *eb.length / sb.scale() : -1.0;
            if (distance(pa, pb) > tol || distance(ma, mb) > tol) continue;
            if (norm(ea.dir - eb.dir) > tol) continue;
            if (std::abs(la - lb) > tol) continue;
            if (ea.depth != eb.depth) continue;
            used[j] = true;
            found = true;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("two-site tree: root at the midpoint with two depth-1 rays") {
    auto sites = SiteSet::from_points({{-1, 0}, {1, 0}});
    DivisionTree t = build_division_tree(build_fvb(sites));
    CHECK(distance(sites.to_original(t.root_pos()), {0, 0}) < 1e-9);
    REQUIRE(t.edges.size() == 2);
    for (const DtEdge& e : t.edges) {
        CHECK(e.depth == 1);
        CHECK(!e.bounded());
        CHECK(e.child == t.infinity_node);
    }
    CHECK(t.depth == 1);
    CHECK(!t.split);
    CHECK(t.children[static_cast<std::size_t>(t.root)].size() == 2);
}

TEST_CASE("center at a node: root keeps three children, second node at depth 1") {
    // four sites whose enclosing circle is the circumcircle of three of them
    auto sites = SiteSet::from_points({{1, 0}, {0, 1.2}, {-1, 0}, {0, -0.8}});
    DivisionTree t = build_division_tree(build_fvb(sites));
    CHECK(!t.split);
    CHECK(t.children[static_cast<std::size_t>(t.root)].size() == 3);
    int depth1_nodes = 0, unbounded = 0;
    for (const DtEdge& e : t.edges) {
        if (!e.bounded()) ++unbounded;
        if (e.bounded() && e.depth == 1) ++depth1_nodes;
    }
    CHECK(unbounded == 4);
    CHECK(depth1_nodes == 1);  // the second node hangs off the root
    CHECK(t.depth == 2);
}

TEST_CASE("center inside an edge: split point becomes the root") {
    // enclosing circle determined by the diametral pair (+-1, 0)
    auto sites = SiteSet::from_points({{1, 0}, {0, 0.9}, {-1, 0}, {0, -0.85}});
    DivisionTree t = build_division_tree(build_fvb(sites));
    REQUIRE(t.split);
    CHECK(distance(sites.to_original(t.root_pos()), {0, 0}) < 1e-9);
    const auto& kids = t.children[static_cast<std::size_t>(t.root)];
    REQUIRE(kids.size() == 2);
    for (int eid : kids) {
        const DtEdge& e = t.edge(eid);
        CHECK(e.depth == 1);
        CHECK(e.bounded());  // both halves end at the original two nodes
        CHECK(t.node(e.child).finite());
    }
    // the two replacement edges are collinear through the root
    Point d0 = t.edge(kids[0]).dir, d1 = t.edge(kids[1]).dir;
    CHECK(std::abs(cross(d0, d1)) < 1e-12);
    CHECK(dot(d0, d1) < 0);
    CHECK(t.depth == 2);
}

TEST_CASE("right-triangle sites: root at the hypotenuse midpoint, one edge on the chord") {
    // circumcenter of a right triangle is the hypotenuse midpoint, which is
    // also the enclosing-circle center, so the root is a degree-3 node with
    // one incident edge starting on its own chord
    auto sites = SiteSet::from_points({{0, 0}, {2, 0}, {1, 1}});
    DivisionTree t = build_division_tree(build_fvb(sites));
    CHECK(distance(sites.to_original(t.root_pos()), {1, 0}) < 1e-9);
    CHECK(!t.split);
    const auto& kids = t.children[static_cast<std::size_t>(t.root)];
    REQUIRE(kids.size() == 3);
    int on_chord = 0;
    for (int eid : kids) {
        const DtEdge& e = t.edge(eid);
        CHECK(!e.bounded());
        double gamma = distance(t.root_pos(), t.chord_midpoint(e));
        if (gamma < 1e-9) ++on_chord;
    }
    CHECK(on_chord == 1);
}

TEST_CASE("leaves are at infinity and edge depth equals child depth") {
    auto& gen = rng(301);
    for (int rep = 0; rep < 30; ++rep) {
        int m = 2 + rep % 12;
        auto pts = m == 2 ? std::vector<Point>{{0.2, -0.6}, {0.9, 1.4}}
                          : testsupport::random_convex_sites(m, gen);
        auto sites = SiteSet::from_points(pts);
        DivisionTree t = build_division_tree(build_fvb(sites));
        CHECK(distance(t.root_pos(), t.mec.center) < 1e-9);
        CHECK(t.depth >= 1);
        CHECK(t.depth <= std::max(2, t.hull.size() - 1));
        auto kids = t.children[static_cast<std::size_t>(t.root)].size();
        CHECK((kids == 2 || kids == 3));
        for (const FvbNode& n : t.nodes) {
            if (!n.finite() || n.id == t.root) continue;
            // every finite non-root node has children, so leaves sit at infinity
            CHECK(!t.children[static_cast<std::size_t>(n.id)].empty());
        }
        for (const DtEdge& e : t.edges) {
            if (e.child != t.infinity_node) {
                bool found = false;
                for (int ceid : t.children[static_cast<std::size_t>(e.child)])
                    found |= t.edge(ceid).depth == e.depth + 1;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("truncation at full depth is the identity") {
    auto& gen = rng(302);
    auto sites = SiteSet::from_points(testsupport::random_convex_sites(9, gen));
    DivisionTree t = build_division_tree(build_fvb(sites));
    DivisionTree full = truncate(t, t.depth);
    CHECK(trees_match(t, sites, full, sites));
    CHECK_THROWS_AS(truncate(t, -1), DepthOutOfRange);
    CHECK_THROWS_AS(truncate(t, t.depth + 1), DepthOutOfRange);
}

TEST_CASE("depth-1 truncation is one of the three basic shapes") {
    auto& gen = rng(303);
    for (int rep = 0; rep < 12; ++rep) {
        auto sites = SiteSet::from_points(testsupport::random_convex_sites(4 + rep % 8, gen));
        DivisionTree t = build_division_tree(build_fvb(sites));
        DivisionTree t1 = truncate(t, 1);
        for (const DtEdge& e : t1.edges) {
            CHECK(e.depth == 1);
            CHECK(!e.bounded());
            CHECK(e.child == t1.infinity_node);
        }
        auto sz = t1.children[static_cast<std::size_t>(t1.root)].size();
        CHECK((sz == 2 || sz == 3));
        CHECK(t1.edges.size() == sz);
    }
}

TEST_CASE("truncation equals the division tree of the involved sites") {
    auto& gen = rng(304);
    int checked = 0;
    for (int rep = 0; rep < 12; ++rep) {
        auto sites = SiteSet::from_points(testsupport::random_convex_sites(8, gen));
        DivisionTree t = build_division_tree(build_fvb(sites));
        for (int d = 1; d <= t.depth; ++d) {
            DivisionTree cut = truncate(t, d);
            std::vector<Point> sub;
            for (int sid : cut.involved_sites()) sub.push_back(sites.original_site(sid));
            auto sub_sites = SiteSet::from_points(sub);
            DivisionTree rebuilt = build_division_tree(build_fvb(sub_sites));
            CHECK(trees_match(cut, sites, rebuilt, sub_sites));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("truncation at depth zero leaves only the root") {
    auto& gen = rng(305);
    auto sites = SiteSet::from_points(testsupport::random_convex_sites(6, gen));
    DivisionTree t = build_division_tree(build_fvb(sites));
    DivisionTree t0 = truncate(t, 0);
    CHECK(t0.edges.empty());
    CHECK(distance(t0.root_pos(), t.root_pos()) < 1e-12);
}
