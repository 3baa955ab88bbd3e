#pragma once

#include <thread>

#include "dwmec/rigid_motion.hpp"

namespace dwmec {

/// Knobs for the brute-force reference searches. Defaults match the checks
/// the library is validated against; shrink them for quick smoke runs.
struct OracleConfig {
    int edge_samples = 100000;    // samples per boundary edge
    int plane_grid = 2000;        // grid cells per axis over the search square
    double plane_span = 4.0;      // search square side, in hull bounding boxes
    int theta_steps = 61;
    int s_steps = 51;
    int refine_rounds = 7;
    int threads = 0;              // 0: hardware concurrency
};

struct OracleSolution {
    Point best;                   // input frame
    double value = 0.0;
    Point best_off_graph;         // best grid sample farther than one cell from the graph
    double value_off_graph = 0.0;
    double value_on_graph = 0.0;  // best among edge samples
    double grid_cell = 0.0;       // grid cell diagonal, input frame
    bool off_graph_beats_graph = false;
};

/// Dense maximization of the objective: a square grid around the hull plus a
/// fine sweep of every boundary edge. Entirely independent of the
/// closed-form path; used to validate it.
inline OracleSolution oracle_solve(const Solver& solver, Point p,
                                   const OracleConfig& cfg = {}) {
    const SiteSet& sites = solver.sites();
    const FvbGraph& g = solver.graph();
    OracleSolution out;

    std::vector<Point> site_pts = sites.originals();
    auto value_at = [&](Point x) {
        double far2 = 0.0;
        for (Point s : site_pts) far2 = std::max(far2, norm2(x - s));
        return distance(x, p) / std::sqrt(far2);
    };

    // Search square: plane_span times the hull bounding box, centered on it.
    Point lo = sites.original_site(g.hull.sites[0]);
    Point hi = lo;
    for (int sid : g.hull.sites) {
        Point v = sites.original_site(sid);
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
    }
    Point center = 0.5 * (lo + hi);
    double half = 0.5 * cfg.plane_span * std::max({hi.x - lo.x, hi.y - lo.y, 1e-9});
    const int n = cfg.plane_grid;
    double step = 2.0 * half / (n - 1);
    out.grid_cell = step * std::sqrt(2.0);

    auto graph_distance = [&](Point x) {
        return solver.graph().distance_to_graph(sites.to_normalized(x)) / sites.scale();
    };

    struct Best {
        double v = -1.0;
        Point at{0, 0};
        double v_off = -1.0;
        Point at_off{0, 0};
    };
    int nthreads = cfg.threads > 0 ? cfg.threads
                                   : std::max(1u, std::thread::hardware_concurrency());
    std::vector<Best> results(static_cast<std::size_t>(nthreads));
    auto run_rows = [&](int tid) {
        Best b;
        for (int iy = tid; iy < n; iy += nthreads) {
            double y = center.y - half + iy * step;
            for (int ix = 0; ix < n; ++ix) {
                Point x{center.x - half + ix * step, y};
                double v = value_at(x);
                if (v > b.v) {
                    b.v = v;
                    b.at = x;
                }
                if (v > b.v_off && graph_distance(x) > out.grid_cell) {
                    b.v_off = v;
                    b.at_off = x;
                }
            }
        }
        results[static_cast<std::size_t>(tid)] = b;
    };
    std::vector<std::thread> pool;
    for (int tid = 1; tid < nthreads; ++tid) pool.emplace_back(run_rows, tid);
    run_rows(0);
    for (auto& th : pool) th.join();
    Best best;
    for (const Best& b : results) {
        if (b.v > best.v) {
            best.v = b.v;
            best.at = b.at;
        }
        if (b.v_off > best.v_off) {
            best.v_off = b.v_off;
            best.at_off = b.at_off;
        }
    }
    out.best = best.at;
    out.value = best.v;
    out.best_off_graph = best.at_off;
    out.value_off_graph = best.v_off;

    // Sweep each boundary edge; unbounded edges through t / (1 - t) so the
    // far tail toward the limiting value 1 is covered.
    double reach = 2.0 * half;
    for (const FvbEdge& e : g.edges) {
        Point a = sites.to_original(*g.node(e.start).pos);
        for (int k = 0; k <= cfg.edge_samples; ++k) {
            double t = static_cast<double>(k) / cfg.edge_samples;
            double lam;
            if (e.bounded()) {
                lam = t * (*e.length / sites.scale());
            } else {
                if (t >= 1.0) break;
                lam = reach * t / (1.0 - t);
            }
            Point x = a + lam * e.dir;
            double v = value_at(x);
            if (v > out.value_on_graph) out.value_on_graph = v;
            if (v > out.value) {
                out.value = v;
                out.best = x;
            }
        }
    }
    out.off_graph_beats_graph =
        out.value_off_graph > out.value_on_graph + out.grid_cell * 4.0;
    return out;
}

inline OracleSolution oracle_solve(const SiteSet& sites, Point p,
                                   const OracleConfig& cfg = {}) {
    return oracle_solve(Solver(sites), p, cfg);
}

struct OracleRigid {
    double value = 0.0;
    RigidMotion motion;
    std::vector<double> round_values;  // nondecreasing across refinement rounds
};

/// Grid search over rotation angle and translation with nested refinement.
/// Translations are parametrized by the displacement u of the site centroid
/// (s = centroid - R centroid + u), which keeps the feasible set centered in
/// the search box for every angle: all feasible u lie within
/// budget + 2 sin(|theta|/2) max_i |x_i - centroid| of the origin. Every
/// candidate passes the explicit feasibility filter; the pure translation of
/// length `budget` toward p seeds the search.
inline OracleRigid oracle_rigid_max(const SiteSet& sites, Point p, double budget,
                                    const OracleConfig& cfg = {}) {
    OracleRigid out;
    Point centroid{0, 0};
    for (Point a : sites.originals()) centroid = centroid + a;
    centroid = centroid / static_cast<double>(sites.size());
    double spread = 0.0;
    for (Point a : sites.originals()) spread = std::max(spread, distance(a, centroid));

    double best_u_x = 0.0, best_u_y = 0.0;
    auto consider = [&](double theta, Point u) {
        Point s = centroid - RigidMotion::make(theta, {0, 0}).rotate(centroid) + u;
        RigidMotion m = RigidMotion::make(theta, s);
        if (!rigid_constraint_check(sites, m, budget, 1e-12)) return false;
        double v = tre_magnitude(p, m);
        if (v > out.value) {
            out.value = v;
            out.motion = m;
            best_u_x = u.x;
            best_u_y = u.y;
            return true;
        }
        return false;
    };

    Point mec_center = compute_mec(sites).center;

    // Inner problem at fixed angle: grid the centroid displacement over the
    // feasible radius, then zoom around the best cell. Near the largest
    // feasible angle the feasible set thins below any cell size, so the
    // sweep also anchors on the always-feasible motion whose contour
    // centers on the enclosing-circle center, and zooms from whichever
    // candidate scores higher.
    auto sweep_angle = [&](double theta) {
        double radius = budget + 2.0 * std::sin(std::abs(theta) / 2.0) * spread + 1e-12;
        Point rotated_centroid = RigidMotion::make(theta, {0, 0}).rotate(centroid);
        Point c{0, 0};
        double c_value = -1.0;
        if (std::abs(theta) > 1e-9) {
            RigidMotion anchor = motion_from_contour(mec_center, theta);
            if (rigid_constraint_check(sites, anchor, budget, 1e-12)) {
                c = tre(centroid, anchor);
                c_value = tre_magnitude(p, anchor);
                consider(theta, c);
            }
        }
        const int steps = cfg.s_steps;
        Point grid_center{0, 0};
        for (int level = 0; level < 5; ++level) {
            Point local_best = c;
            double local_value = c_value;
            for (int ix = 0; ix < steps; ++ix)
                for (int iy = 0; iy < steps; ++iy) {
                    Point u{grid_center.x - radius + 2.0 * radius * ix / (steps - 1),
                            grid_center.y - radius + 2.0 * radius * iy / (steps - 1)};
                    RigidMotion m =
                        RigidMotion::make(theta, centroid - rotated_centroid + u);
                    if (!rigid_constraint_check(sites, m, budget, 1e-12)) continue;
                    double v = tre_magnitude(p, m);
                    if (v > local_value) {
                        local_value = v;
                        local_best = u;
                    }
                }
            if (local_value < 0) return;  // nothing feasible at this angle
            consider(theta, local_best);
            c = local_best;
            c_value = local_value;
            grid_center = local_best;
            radius = 4.0 * radius / (steps - 1);
        }
    };

    Point seed_dir = normalized(p - centroid);
    if (norm(seed_dir) == 0.0) seed_dir = {1.0, 0.0};
    consider(0.0, budget * seed_dir);

    double theta_c = 0.0, theta_half = M_PI;
    for (int round = 0; round < cfg.refine_rounds; ++round) {
        for (int it = 0; it < cfg.theta_steps; ++it) {
            double theta =
                theta_c - theta_half + 2.0 * theta_half * it / (cfg.theta_steps - 1);
            if (std::abs(theta) > M_PI) continue;
            sweep_angle(theta);
        }
        out.round_values.push_back(out.value);
        theta_c = out.motion.theta;
        // keep a window of two grid cells around the incumbent angle
        theta_half = 4.0 * theta_half / (cfg.theta_steps - 1);
        // re-zoom the translation around the incumbent as well
        consider(out.motion.theta, {best_u_x, best_u_y});
    }
    return out;
}

}  // namespace dwmec
