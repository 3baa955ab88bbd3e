#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace dwmec;
using testsupport::rng;

TEST_CASE("mec worked values") {
    auto a = SiteSet::from_points({{0, 0}, {2, 0}});
    Circle ca = compute_mec(a);
    CHECK(distance(ca.center, {1, 0}) < 1e-9);
    CHECK(ca.radius == doctest::Approx(1.0).epsilon(1e-9));

    auto b = SiteSet::from_points({{0, 0}, {2, 0}, {1, 1}});
    Circle cb = compute_mec(b);
    CHECK(distance(cb.center, {1, 0}) < 1e-9);
    CHECK(cb.radius == doctest::Approx(1.0).epsilon(1e-9));

    auto c = SiteSet::from_points(
        {{1, 0}, {-0.5, std::sqrt(3) / 2}, {-0.5, -std::sqrt(3) / 2}});
    Circle cc = compute_mec(c);
    CHECK(norm(cc.center) < 1e-9);
    CHECK(cc.radius == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mec covers all sites and matches the brute-force oracle") {
    auto& gen = rng(201);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 3 + rep % 8;
        auto pts = testsupport::random_sites(n, gen);
        auto sites = SiteSet::from_points(pts);
        Circle mec = compute_mec(sites);
        for (Point p : pts) CHECK(distance(mec.center, p) <= mec.radius + 1e-9);
        Circle brute = testsupport::brute_mec(pts);
        CHECK(std::abs(mec.radius - brute.radius) < 1e-6);
    }
}

TEST_CASE("two-site boundary graph is the perpendicular bisector") {
    auto sites = SiteSet::from_points({{-1, 0}, {1, 0}});
    FvbGraph g = build_fvb(sites);
    REQUIRE(g.nodes.size() == 2);  // midpoint + infinity
    REQUIRE(g.edges.size() == 2);
    const FvbNode& mid = g.node(0);
    CHECK(mid.finite());
    CHECK(distance(*mid.pos, sites.to_normalized({0, 0})) < 1e-12);
    for (const FvbEdge& e : g.edges) {
        CHECK(!e.bounded());
        CHECK(std::abs(e.dir.x) < 1e-12);  // vertical bisector
        CHECK(e.end == g.infinity_node);
    }
    CHECK(std::abs(g.edges[0].dir.y + g.edges[1].dir.y) < 1e-12);  // opposite rays
}

TEST_CASE("equilateral triangle gives three rays from the centroid") {
    auto sites = SiteSet::from_points(
        {{1, 0}, {-0.5, std::sqrt(3) / 2}, {-0.5, -std::sqrt(3) / 2}});
    FvbGraph g = build_fvb(sites);
    REQUIRE(g.edges.size() == 3);
    Point center = sites.to_normalized({0, 0});
    for (const FvbEdge& e : g.edges) {
        CHECK(!e.bounded());
        CHECK(distance(*g.node(e.start).pos, center) < 1e-9);
        // sampled ray points are farthest-equidistant from the labeling pair
        for (double lam : {0.05, 0.7, 3.0}) {
            Point q = *g.node(e.start).pos + lam * e.dir;
            Point qo = sites.to_original(q);
            auto far = testsupport::farthest_sites(sites.originals(), qo);
            REQUIRE(far.size() == 2);
            CHECK(((far[0] == e.sites[0] && far[1] == e.sites[1]) ||
                   (far[0] == e.sites[1] && far[1] == e.sites[0])));
        }
    }
}

TEST_CASE("edge samples of a random hull separate the right cells") {
    auto& gen = rng(202);
    auto pts = testsupport::random_convex_sites(8, gen);
    while (convex_hull_indices(pts).size() != 8) pts = testsupport::random_convex_sites(8, gen);
    auto sites = SiteSet::from_points(pts);
    FvbGraph g = build_fvb(sites);
    int samples = 0;
    for (const FvbEdge& e : g.edges) {
        Point a = *g.node(e.start).pos;
        for (int k = 1; k <= 125; ++k) {
            double lam = e.bounded() ? *e.length * k / 126.0 : 0.02 * k;
            Point q = sites.to_original(a + lam * e.dir);
            auto far = testsupport::farthest_sites(sites.originals(), q, 1e-9);
            REQUIRE(far.size() == 2);
            CHECK(far[0] == std::min(e.sites[0], e.sites[1]));
            CHECK(far[1] == std::max(e.sites[0], e.sites[1]));
            ++samples;
        }
    }
    CHECK(samples >= 1000);
}

TEST_CASE("structural counts and tree property on random instances") {
    auto& gen = rng(203);
    for (int rep = 0; rep < 60; ++rep) {
        int m = 2 + rep % 29;
        auto pts = m == 2 ? std::vector<Point>{{0, 0}, {1.3, 0.4}}
                          : testsupport::random_convex_sites(m, gen);
        auto sites = SiteSet::from_points(pts);
        FvbGraph g = build_fvb(sites);
        int mm = g.hull.size();
        int finite_nodes = 0;
        for (const FvbNode& n : g.nodes) finite_nodes += n.finite() ? 1 : 0;
        CHECK(static_cast<int>(g.edges.size()) <= 2 * mm - 3 + (mm == 2 ? 1 : 0));
        CHECK(finite_nodes + 1 <= std::max(m - 1, 2));
        int unbounded = 0;
        for (const FvbEdge& e : g.edges) unbounded += e.bounded() ? 0 : 1;
        // connected acyclic structure with its leaves at infinity
        CHECK(static_cast<int>(g.edges.size()) == finite_nodes + unbounded - 1);
        // the enclosing-circle center lies on the graph
        CHECK(g.distance_to_graph(g.mec.center) <= 1e-9);
        // every hull vertex labels at least one edge
        for (int sid : g.hull.sites) CHECK(!g.cell_edges(sid).empty());
        // every three-edge node is equidistant from its defining sites
        for (const FvbNode& n : g.nodes) {
            if (!n.finite() || n.sites.size() != 3) continue;
            double d0 = distance(*n.pos, g.site(n.sites[0]));
            CHECK(std::abs(d0 - distance(*n.pos, g.site(n.sites[1]))) < 1e-9);
            CHECK(std::abs(d0 - distance(*n.pos, g.site(n.sites[2]))) < 1e-9);
        }
    }
}

TEST_CASE("bounded edges put the start node nearer the chord") {
    auto& gen = rng(204);
    for (int rep = 0; rep < 20; ++rep) {
        auto sites = SiteSet::from_points(testsupport::random_convex_sites(9, gen));
        FvbGraph g = build_fvb(sites);
        for (const FvbEdge& e : g.edges) {
            Point mid = g.chord_midpoint(e);
            double ds = distance(*g.node(e.start).pos, mid);
            if (e.bounded()) {
                double de = distance(*g.node(e.end).pos, mid);
                CHECK(ds <= de + 1e-9);
            }
            // the edge lies on the perpendicular bisector of its pair
            for (double lam : {0.0, 0.3, 1.1}) {
                Point q = *g.node(e.start).pos + lam * (e.bounded() ? *e.length : 1.0) * e.dir;
                double di = distance(q, g.site(e.sites[0]));
                double dj = distance(q, g.site(e.sites[1]));
                CHECK(std::abs(di - dj) < 1e-9);
            }
        }
    }
}

TEST_CASE("general position violation propagates to the graph build") {
    auto sites = SiteSet::from_points({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK_THROWS_AS(build_fvb(sites), GeneralPositionViolation);
}

TEST_CASE("node inverse region arcs pass through the node's site pairs") {
    // four-site instance whose center sits at a node: one non-root node remains
    auto sites = SiteSet::from_points({{1, 0}, {0, 1.2}, {-1, 0}, {0, -0.8}});
    FvbGraph g = build_fvb(sites);
    int other = -1;
    for (const FvbNode& n : g.nodes)
        if (n.finite() && distance(*n.pos, g.mec.center) > 1e-9) other = n.id;
    REQUIRE(other >= 0);
    auto arcs = node_inverse_region(g, other);
    REQUIRE(arcs.size() == 3);
    const FvbNode& n = g.node(other);
    for (const Arc& a : arcs) {
        // arc endpoints are sites of the node's triple
        for (double t : {0.0, 1.0}) {
            Point endpt = a.at(t);
            bool hits = false;
            for (int sid : n.sites)
                if (distance(endpt, g.site(sid)) < 1e-9) hits = true;
            CHECK(hits);
        }
        // the arc's circle passes through the node itself
        CHECK(std::abs(distance(a.center, *n.pos) - a.radius) < 1e-9);
    }

    CHECK_THROWS_AS(node_inverse_region(g, g.infinity_node), NotApplicable);
    for (const FvbNode& nn : g.nodes)
        if (nn.finite() && distance(*nn.pos, g.mec.center) <= 1e-9)
            CHECK_THROWS_AS(node_inverse_region(g, nn.id), NotApplicable);
}
