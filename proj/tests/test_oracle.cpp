#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace dwmec;
using testsupport::rng;

namespace {

OracleConfig quick_cfg() {
    OracleConfig cfg;
    cfg.plane_grid = 400;
    cfg.edge_samples = 20000;
    cfg.theta_steps = 41;
    cfg.s_steps = 31;
    cfg.refine_rounds = 6;
    return cfg;
}

}  // namespace

TEST_CASE("plane oracle reproduces the worked two-site values") {
    auto sites = SiteSet::from_points({{-1, 0}, {1, 0}});
    Solver solver(sites);
    {
        OracleSolution o = oracle_solve(solver, {0, 0.5}, quick_cfg());
        CHECK(o.value == doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-4));
        CHECK(distance(o.best, {0, -2}) < 1e-2);
        // nothing off the boundary graph competes with it
        CHECK(!o.off_graph_beats_graph);
        CHECK(o.value_on_graph >= o.value_off_graph - 1e-9);
    }
    {
        // weight point inside the hull: every interior sample stays below 1
        OracleSolution o = oracle_solve(solver, {0.5, 0}, quick_cfg());
        CHECK(o.value <= 1.0 + 1e-9);
        CHECK(o.value > 0.99);
    }
}

TEST_CASE("plane oracle never beats the analytic solution") {
    auto& gen = rng(701);
    for (int rep = 0; rep < 8; ++rep) {
        auto sites = SiteSet::from_points(testsupport::random_convex_sites(3 + rep, gen));
        Solver solver(sites);
        Point p = testsupport::random_point(gen, -2, 2);
        Point pn = sites.to_normalized(p);
        bool near_vertex = false;
        for (Point v : solver.tree().hull.pts) near_vertex |= distance(pn, v) < 1e-6;
        if (near_vertex) continue;
        Solution sol = solver.solve(p);
        OracleSolution o = oracle_solve(solver, p, quick_cfg());
        double lips = (1.0 + sol.value) / solver.mec().radius * o.grid_cell;
        CHECK(o.value <= sol.value + 1e-9);
        CHECK(o.value >= sol.value - std::max(lips, 1e-4));
        CHECK(o.value_off_graph <= sol.value + 1e-9);
    }
}

TEST_CASE("rigid oracle matches the equivalence on the worked instance") {
    auto sites = SiteSet::from_points({{-1, 0}, {1, 0}});
    OracleRigid o = oracle_rigid_max(sites, {0, -3}, 1.0, quick_cfg());
    CHECK(o.value == doctest::Approx(std::sqrt(10.0)).epsilon(1e-3));
    CHECK(rigid_constraint_check(sites, o.motion, 1.0));
    // refinement never regresses
    for (std::size_t i = 1; i < o.round_values.size(); ++i)
        CHECK(o.round_values[i] >= o.round_values[i - 1] - 1e-15);
}

TEST_CASE("rigid oracle degenerates to the budget for tiny and zero rotation") {
    auto sites = SiteSet::from_points({{-1, 0}, {1, 0}});
    {
        // pure-translation slice: the best feasible motion moves p by the budget
        OracleConfig cfg = quick_cfg();
        OracleRigid o = oracle_rigid_max(sites, {0.5, 0}, 0.7, cfg);
        CHECK(o.value == doctest::Approx(0.7).epsilon(1e-6));
        CHECK(std::abs(o.motion.theta) < 0.2);
    }
    {
        // budget to zero: value goes to zero linearly
        OracleRigid o = oracle_rigid_max(sites, {0, -3}, 1e-3, quick_cfg());
        CHECK(o.value < std::sqrt(10.0) * 1e-3 + 1e-9);
        CHECK(o.value > 0.5 * std::sqrt(10.0) * 1e-3);
    }
}
