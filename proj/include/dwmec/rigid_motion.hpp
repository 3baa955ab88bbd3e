#pragma once

#include "dwmec/center_function.hpp"

namespace dwmec {

/// Planar rigid motion q -> R q + s with rotation angle wrapped to (-pi, pi].
struct RigidMotion {
    double theta = 0.0;
    Point s{0.0, 0.0};

    static RigidMotion make(double theta, Point s) {
        double t = std::remainder(theta, 2.0 * M_PI);
        if (t <= -M_PI) t += 2.0 * M_PI;
        return {t, s};
    }

    Point rotate(Point q) const {
        double c = std::cos(theta), sn = std::sin(theta);
        return {c * q.x - sn * q.y, sn * q.x + c * q.y};
    }
    Point apply(Point q) const { return rotate(q) + s; }
};

/// Displacement of a point under the motion.
inline Point tre(Point q, const RigidMotion& m) { return m.apply(q) - q; }

inline double tre_magnitude(Point q, const RigidMotion& m) { return norm(tre(q, m)); }

/// For theta != 0 the displacement magnitude is 2 sin(|theta|/2) times the
/// distance to a fixed center, so its level sets are concentric circles.
struct TreContour {
    Point center;
    double scale = 0.0;  // 2 sin(|theta| / 2)
};

inline TreContour contour(const RigidMotion& m) {
    if (std::abs(m.theta) <= 1e-12)
        throw ZeroRotation("displacement is constant for a pure translation");
    double k = 1.0 / std::tan(m.theta / 2.0);
    TreContour c;
    c.center = {0.5 * (m.s.x - m.s.y * k), 0.5 * (m.s.x * k + m.s.y)};
    c.scale = 2.0 * std::sin(std::abs(m.theta) / 2.0);
    return c;
}

/// Motion with the prescribed contour center and rotation angle.
inline RigidMotion motion_from_contour(Point center, double theta) {
    double k = 1.0 / std::tan(theta / 2.0);
    double den = 1.0 + k * k;
    Point s{2.0 * (center.x + k * center.y) / den, 2.0 * (center.y - k * center.x) / den};
    return RigidMotion::make(theta, s);
}

inline bool rigid_constraint_check(const SiteSet& sites, const RigidMotion& m, double budget,
                                   double slack = kDistanceTol) {
    for (Point x : sites.originals())
        if (tre_magnitude(x, m) > budget + slack) return false;
    return true;
}

struct DisplacementBound {
    double value = 0.0;     // maximum displacement of the target
    RigidMotion witness;    // motion attaining it (approaching it when pure translation)
    Solution solution;      // the dynamic-weight optimum behind the construction
};

/// Worst-case displacement of target p when every site may move at most
/// `budget` under a common rigid motion. Equals budget times the
/// dynamic-weight optimum; valid for 0 < budget <= 2 r(S).
inline DisplacementBound max_displacement(const Solver& solver, Point p, double budget) {
    Circle mec = solver.mec();
    if (!(budget > 0.0) || budget > 2.0 * mec.radius + kDistanceTol)
        throw BudgetOutOfRange("budget must lie in (0, 2 r(S)]");

    DisplacementBound out;
    out.solution = solver.solve(p);
    out.value = budget * out.solution.value;

    if (out.solution.locus.kind == LocusKind::infinity) {
        // Pure translation; any direction is extremal, pick the one toward p.
        Point centroid{0, 0};
        for (int sid : solver.graph().hull.sites)
            centroid = centroid + solver.sites().original_site(sid);
        centroid = centroid / static_cast<double>(solver.graph().hull.sites.size());
        Point dir = normalized(p - centroid);
        if (norm(dir) == 0.0) dir = {1.0, 0.0};
        out.witness = RigidMotion::make(0.0, budget * dir);
        return out;
    }

    Point x_star = *out.solution.locus.point;
    double far = 0.0;
    for (Point x : solver.sites().originals()) far = std::max(far, distance(x_star, x));
    double sin_half = std::clamp(budget / (2.0 * far), 0.0, 1.0);
    double theta = 2.0 * std::asin(sin_half);
    out.witness = motion_from_contour(x_star, theta);
    return out;
}

inline DisplacementBound max_displacement(const SiteSet& sites, Point p, double budget) {
    return max_displacement(Solver(sites), p, budget);
}

}  // namespace dwmec
