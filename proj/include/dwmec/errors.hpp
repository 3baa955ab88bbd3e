#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwmec {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input point set cannot be used (non-finite coordinates, fewer than two
/// distinct points after snapping, ...).
struct DegenerateInput : Error {
    using Error::Error;
};

/// Three points handed to a circumcenter construction are (nearly) collinear.
struct CollinearInput : Error {
    using Error::Error;
};

/// Four hull vertices are co-circular within tolerance; the boundary graph
/// is ambiguous for such inputs.
struct GeneralPositionViolation : Error {
    explicit GeneralPositionViolation(std::vector<std::array<int, 4>> quads)
        : Error("general position violated: co-circular hull vertices"),
          quadruples(std::move(quads)) {}

    std::vector<std::array<int, 4>> quadruples;  // offending site ids
};

/// The weight point coincides with a hull vertex. The optimizer is then any
/// point of that vertex's farthest-point cell; the cell is described by the
/// site id and the ids of the boundary edges labeled with that site.
struct VertexCoincidence : Error {
    VertexCoincidence(int site_id, std::vector<int> edges)
        : Error("weight point coincides with hull vertex " + std::to_string(site_id)),
          site(site_id),
          cell_edges(std::move(edges)) {}

    int site;
    std::vector<int> cell_edges;
};

/// Displacement budget outside (0, 2 r(S)]; the equivalence with the
/// dynamic-weight problem is only established on that interval.
struct BudgetOutOfRange : Error {
    using Error::Error;
};

/// Truncation depth outside [0, D].
struct DepthOutOfRange : Error {
    using Error::Error;
};

/// TRE contour requested for a pure translation (theta == 0).
struct ZeroRotation : Error {
    using Error::Error;
};

/// Query does not apply to the given node (infinity node, or the node
/// carrying the enclosing-circle center).
struct NotApplicable : Error {
    using Error::Error;
};

}  // namespace dwmec
