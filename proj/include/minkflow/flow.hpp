#pragma once

#include <limits>
#include <vector>

#include "minkflow/closed_form.hpp"
#include "minkflow/surface.hpp"

namespace minkflow {

/// Times for which the outward normal flow of a closed convex surface stays
/// embedded: [0, inf) for K <= 0 and [0, pi/2) for K = +1.
struct ValidityWindow {
    double t_min = 0.0;
    double t_max = std::numeric_limits<double>::infinity();

    bool contains(double t) const noexcept { return t >= t_min && t < t_max; }
};

ValidityWindow validity_window(SpaceKind space) noexcept;

/// S_t: every vertex moved a geodesic distance t along its outward normal.
/// Faces are kept; normals, radii, directions and weights are recomputed.
SurfaceMesh flow_surface(const SurfaceMesh& mesh, double t);

/// Discrete areas and volumes of the flowed meshes on t_grid.
FlowSeries flow_series(const SurfaceMesh& mesh, const std::vector<double>& t_grid);

/// Central second difference of the areas minus (-4K A + 8 pi) at each
/// interior grid point. The grid must be uniform.
std::vector<double> ode_residual(const FlowSeries& series, SpaceKind space);

struct ComparisonReport {
    double max_rel_area_err = 0.0;
    double max_rel_vol_err = 0.0;
    GeometricSummary summary;
    FlowSeries analytic;
    FlowSeries discrete;
};

/// Builds the closed-form series from summarize(mesh) and compares it with
/// the discrete flow on t_grid.
ComparisonReport compare_analytic(const SurfaceMesh& mesh, const std::vector<double>& t_grid);

/// 9 uniform points on [0, 2] for K <= 0, on [0, 0.9 pi/2] for K = +1.
std::vector<double> default_comparison_grid(SpaceKind space);

}  // namespace minkflow
