// Command-line front end: reads a problem file (JSON), runs the solvers and
// reference searches, prints JSON results on stdout and diagnostics on
// stderr. Exit codes: 0 ok, 2 parse error, 3 general-position violation,
// 4 weight point on a hull vertex, 5 displacement budget out of range.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dwmec/dwmec.hpp"
#include "dwmec/json_io.hpp"
#include "dwmec/svg.hpp"

using namespace dwmec;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Point require_p(const ProblemFile& pf) {
    if (!pf.p) throw ParseError("this command needs a weight point \"p\"");
    return *pf.p;
}

double require_budget(const ProblemFile& pf) {
    if (!pf.budget) throw ParseError("this command needs a displacement budget \"C\"");
    return *pf.budget;
}

void write_oracle_solution(JsonWriter& w, const OracleSolution& o) {
    w.begin_object();
    w.kv("best", o.best);
    w.kv("value", o.value);
    w.kv("off_graph_value", o.value_off_graph);
    w.kv("on_graph_value", o.value_on_graph);
    w.kv("grid_cell", o.grid_cell);
    w.kv("off_graph_beats_graph", o.off_graph_beats_graph);
    w.end_object();
}

void write_oracle_rigid(JsonWriter& w, const OracleRigid& o) {
    w.begin_object();
    w.kv("value", o.value);
    w.key("witness").begin_object();
    w.kv("theta", o.motion.theta);
    w.kv("s", o.motion.s);
    w.end_object();
    w.end_object();
}

Solution run_solve(const Solver& solver, Point p, const std::string& method) {
    if (method == "descent") return solver.solve_by_descent(p);
    return solver.solve_by_traversal(p);
}

int run(int argc, char** argv) {
    CLI::App app{"minimum enclosing circle with a dynamic weight point"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string method = "traversal";
    std::string svg_path;
    std::string batch_path;
    double tolerance = kPredicateTol;
    bool with_oracle = false;

    auto add_common = [&](CLI::App* cmd, bool wants_method, bool wants_oracle,
                          bool wants_svg, bool wants_batch) {
        cmd->add_option("input", input, "problem file (JSON), or - for stdin");
        cmd->add_option("--tolerance", tolerance,
                        "predicate tolerance for the general-position check");
        if (wants_method)
            cmd->add_option("--method", method, "traversal or descent")
                ->check(CLI::IsMember({"traversal", "descent"}));
        if (wants_oracle)
            cmd->add_flag("--oracle", with_oracle, "append a brute-force comparison");
        if (wants_svg) cmd->add_option("--svg", svg_path, "also write an SVG rendering");
        if (wants_batch)
            cmd->add_option("--batch", batch_path, "solve every point of this JSON array");
    };

    CLI::App* cmd_mec = app.add_subcommand("mec", "smallest enclosing circle");
    add_common(cmd_mec, false, false, false, false);
    CLI::App* cmd_fvd = app.add_subcommand("fvd", "farthest-point Voronoi boundary graph");
    add_common(cmd_fvd, false, false, true, false);
    CLI::App* cmd_solve = app.add_subcommand("solve", "optimizer for the weight point");
    add_common(cmd_solve, true, true, false, true);
    CLI::App* cmd_regions = app.add_subcommand("regions", "plane division of the center function");
    add_common(cmd_regions, false, false, true, false);
    CLI::App* cmd_tre = app.add_subcommand("tre-max", "worst-case rigid-motion displacement");
    add_common(cmd_tre, false, true, false, false);
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "brute-force reference answers");
    add_common(cmd_oracle, false, false, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    ProblemFile pf = parse_problem(read_input(input));
    SiteSet sites = SiteSet::from_points(pf.sites);
    JsonWriter w;

    if (cmd_mec->parsed()) {
        Circle c = compute_mec(sites);
        w.begin_object();
        w.kv("center", c.center);
        w.kv("radius", c.radius);
        w.end_object();
    } else if (cmd_fvd->parsed()) {
        Solver solver(sites, tolerance);
        const FvbGraph& g = solver.graph();
        w.begin_object();
        w.kv("m", g.hull.size());
        w.key("mec");
        write_circle(w, solver.mec());
        w.key("hull").begin_array();
        for (int sid : g.hull.sites) w.value(sid);
        w.end_array();
        w.key("nodes").begin_array();
        for (const FvbNode& n : g.nodes) {
            w.begin_object();
            w.kv("id", n.id);
            if (n.finite()) w.kv("at", sites.to_original(*n.pos));
            else w.kv("at", "infinity");
            w.key("sites").begin_array();
            for (int sid : n.sites) w.value(sid);
            w.end_array();
            w.end_object();
        }
        w.end_array();
        w.key("edges").begin_array();
        for (const FvbEdge& e : g.edges) {
            w.begin_object();
            w.kv("id", e.id);
            w.key("sites").begin_array().value(e.sites[0]).value(e.sites[1]).end_array();
            w.kv("from", e.start);
            w.kv("to", e.end);
            w.kv("dir", e.dir);
            if (e.bounded()) w.kv("length", *e.length / sites.scale());
            else w.kv("length", "unbounded");
            w.end_object();
        }
        w.end_array();
        w.end_object();
        if (!svg_path.empty()) {
            std::ofstream out(svg_path);
            out << render_svg(solver, solver.enumerate_regions(), pf.p);
        }
    } else if (cmd_solve->parsed()) {
        Solver solver(sites, tolerance);
        if (!batch_path.empty()) {
            std::vector<Point> points = parse_batch(read_input(batch_path));
            w.begin_object();
            w.key("results").begin_array();
            for (Point p : points) write_solution(w, run_solve(solver, p, method));
            w.end_array();
            w.end_object();
        } else {
            Point p = require_p(pf);
            Solution sol = run_solve(solver, p, method);
            w.begin_object();
            write_locus(w, sol.locus);
            w.kv("value", sol.value);
            w.kv("unique", sol.unique);
            w.key("ties").begin_array();
            for (const Locus& l : sol.ties) {
                w.begin_object();
                write_locus(w, l);
                w.end_object();
            }
            w.end_array();
            w.kv("method", method);
            if (with_oracle) {
                w.key("oracle");
                write_oracle_solution(w, oracle_solve(solver, p, pf.oracle));
            }
            w.end_object();
        }
    } else if (cmd_regions->parsed()) {
        Solver solver(sites, tolerance);
        PlaneDivision pd = solver.enumerate_regions();
        w.begin_object();
        w.kv("m", pd.m);
        w.kv("count", pd.count());
        w.key("regions").begin_array();
        for (const Region& r : pd.regions) {
            w.begin_object();
            switch (r.kind) {
                case RegionKind::node: w.kv("label", "node"); w.kv("node", r.id); break;
                case RegionKind::edge: w.kv("label", "edge"); w.kv("edge", r.id); break;
                case RegionKind::infinity: w.kv("label", "infinity"); break;
            }
            if (r.degenerate) w.kv("degenerate", true);
            w.key("boundary");
            write_boundary(w, r.boundary);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        if (!svg_path.empty()) {
            std::ofstream out(svg_path);
            out << render_svg(solver, pd, pf.p);
        }
    } else if (cmd_tre->parsed()) {
        Solver solver(sites, tolerance);
        Point p = require_p(pf);
        double budget = require_budget(pf);
        DisplacementBound b = max_displacement(solver, p, budget);
        w.begin_object();
        w.kv("value", b.value);
        w.key("witness").begin_object();
        w.kv("theta", b.witness.theta);
        w.kv("s", b.witness.s);
        w.end_object();
        w.key("solution");
        write_solution(w, b.solution);
        if (with_oracle) {
            w.key("oracle");
            write_oracle_rigid(w, oracle_rigid_max(sites, p, budget, pf.oracle));
        }
        w.end_object();
    } else if (cmd_oracle->parsed()) {
        Solver solver(sites, tolerance);
        Point p = require_p(pf);
        w.begin_object();
        w.key("solve");
        write_oracle_solution(w, oracle_solve(solver, p, pf.oracle));
        if (pf.budget) {
            w.key("rigid");
            write_oracle_rigid(w, oracle_rigid_max(sites, p, *pf.budget, pf.oracle));
        }
        w.end_object();
    }

    std::cout << w.str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInput& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const GeneralPositionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& q : e.quadruples)
            std::cerr << "  co-circular sites: " << q[0] << " " << q[1] << " " << q[2]
                      << " " << q[3] << "\n";
        return 3;
    } catch (const VertexCoincidence& e) {
        std::cerr << "error: " << e.what() << "; the optimum is any point of that"
                  << " vertex's cell, bounded by edges";
        for (int id : e.cell_edges) std::cerr << " " << id;
        std::cerr << "\n";
        return 4;
    } catch (const BudgetOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
