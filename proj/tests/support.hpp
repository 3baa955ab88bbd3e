#pragma once

// Shared helpers for the test suites: deterministic instance generators and
// small brute-force oracles kept independent of the library's analytic
// paths.

#include <random>

#include "dwmec/dwmec.hpp"

namespace testsupport {

using dwmec::Point;

inline std::mt19937& rng(unsigned reseed = 0) {
    static std::mt19937 gen(20240901u);
    if (reseed) gen.seed(reseed);
    return gen;
}

inline double uniform(double lo, double hi, std::mt19937& gen) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline Point random_point(std::mt19937& gen, double lo = -1.0, double hi = 1.0) {
    return {uniform(lo, hi, gen), uniform(lo, hi, gen)};
}

/// Random site set with a hull of roughly the requested size: points on a
/// jittered circle, which keeps them in convex position and in general
/// position with probability one.
inline std::vector<Point> random_convex_sites(int m, std::mt19937& gen,
                                              double radius = 1.0) {
    std::vector<double> angles(static_cast<std::size_t>(m));
    for (auto& a : angles) a = uniform(0.0, 2.0 * M_PI, gen);
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    pts.reserve(angles.size());
    for (double a : angles) {
        double r = radius * uniform(0.6, 1.4, gen);
        pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return pts;
}

/// Mixed cloud: convex-position core plus interior points.
inline std::vector<Point> random_sites(int n, std::mt19937& gen) {
    std::vector<Point> pts = random_convex_sites(std::max(2, n / 2 + 1), gen);
    while (static_cast<int>(pts.size()) < n) pts.push_back(random_point(gen, -0.5, 0.5));
    return pts;
}

/// O(n^3) hull oracle: a point belongs to the hull iff it is not strictly
/// inside a triangle of other points; orientation checks only.
inline bool hull_contains_all_left(const std::vector<Point>& pts,
                                   const std::vector<int>& hull) {
    const int m = static_cast<int>(hull.size());
    for (int i = 0; i < m; ++i) {
        Point a = pts[static_cast<std::size_t>(hull[i])];
        Point b = pts[static_cast<std::size_t>(hull[(i + 1) % m])];
        for (const Point& q : pts)
            if (dwmec::orientation(a, b, q) < -1e-9) return false;
    }
    return true;
}

/// Brute-force minimum enclosing circle: grid search then local refinement.
inline dwmec::Circle brute_mec(const std::vector<Point>& pts, int grid = 200) {
    Point lo = pts[0], hi = pts[0];
    for (Point p : pts) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    auto far = [&](Point c) {
        double f = 0.0;
        for (Point p : pts) f = std::max(f, dwmec::distance(c, p));
        return f;
    };
    Point best = 0.5 * (lo + hi);
    double best_r = far(best);
    Point c0 = 0.5 * (lo + hi);
    double half = 0.5 * std::max(hi.x - lo.x, hi.y - lo.y) + 1e-12;
    for (int round = 0; round < 30; ++round) {
        for (int i = 0; i <= grid; ++i)
            for (int j = 0; j <= grid; ++j) {
                Point c{c0.x - half + 2 * half * i / grid, c0.y - half + 2 * half * j / grid};
                double r = far(c);
                if (r < best_r) {
                    best_r = r;
                    best = c;
                }
            }
        c0 = best;
        half = std::max(4.0 * half / grid, 1e-13);
        if (half < 1e-12) break;
    }
    return {best, best_r};
}

/// Farthest sites of a query point, with a tie tolerance.
inline std::vector<int> farthest_sites(const std::vector<Point>& pts, Point q,
                                       double tol = 1e-7) {
    double far = 0.0;
    for (Point p : pts) far = std::max(far, dwmec::distance(q, p));
    std::vector<int> ids;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (dwmec::distance(q, pts[i]) >= far - tol) ids.push_back(static_cast<int>(i));
    return ids;
}

/// Dense 1-D scan of the restricted objective along an edge: uniform over a
/// bounded edge, t/(1-t) mapped for an unbounded one, followed by local
/// zoom passes so the peak offset is located well below the comparison
/// tolerances.
struct ScanResult {
    double offset = 0.0;  // best finite offset
    double value = 0.0;   // best value over the closed edge (limit included)
    bool at_infinity = false;
};

inline ScanResult scan_edge(const dwmec::EdgeFrame& f, Point p, int samples = 100000) {
    auto eval = [&](double lam) { return dwmec::objective_on_edge(f, p, lam); };
    double hi_map = 50.0 * (1.0 + f.site_dist);  // reach of the unbounded sweep
    ScanResult best;
    best.offset = 0.0;
    best.value = eval(0.0);
    auto consider = [&](double lam) {
        double v = eval(lam);
        if (v > best.value) {
            best.value = v;
            best.offset = lam;
        }
    };
    if (f.bounded()) {
        for (int k = 0; k <= samples; ++k)
            consider(*f.length * k / samples);
    } else {
        for (int k = 0; k < samples; ++k) {
            double t = static_cast<double>(k) / samples;
            consider(hi_map * t / (1.0 - t));
        }
    }
    // zoom passes around the incumbent
    double w = f.bounded() ? *f.length / samples : 2.0 * hi_map / samples;
    for (int pass = 0; pass < 3; ++pass) {
        double lo = std::max(0.0, best.offset - w);
        double hi = f.bounded() ? std::min(*f.length, best.offset + w) : best.offset + w;
        for (int k = 0; k <= 2000; ++k) consider(lo + (hi - lo) * k / 2000);
        w /= 500.0;
    }
    if (!f.bounded() && 1.0 > best.value) {
        best.value = 1.0;
        best.at_infinity = true;
    }
    return best;
}

}  // namespace testsupport
