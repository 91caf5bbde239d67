#include "minkflow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "minkflow/errors.hpp"

namespace minkflow {

ValidityWindow validity_window(SpaceKind space) noexcept {
    ValidityWindow w;
    if (space == SpaceKind::Spherical) w.t_max = std::numbers::pi / 2.0;
    return w;
}

SurfaceMesh flow_surface(const SurfaceMesh& mesh, double t) {
    if (!validity_window(mesh.space).contains(t)) {
        throw DomainError("flow_surface: t = " + std::to_string(t) + " is outside the validity window");
    }
    SurfaceMesh out = mesh;
    if (t == 0.0) return out;
    out.vertices = offset_vertices(mesh, t);
    refresh_radial_data(out);
    recompute_normals(out);
    return out;
}

FlowSeries flow_series(const SurfaceMesh& mesh, const std::vector<double>& t_grid) {
    if (!std::is_sorted(t_grid.begin(), t_grid.end())) throw InputError("flow_series: grid must be increasing");
    FlowSeries out;
    out.provenance = Provenance::Discrete;
    for (double t : t_grid) {
        const SurfaceMesh flowed = flow_surface(mesh, t);
        out.t_values.push_back(t);
        out.areas.push_back(surface_area(flowed));
        out.volumes.push_back(enclosed_volume(flowed));
    }
    return out;
}

std::vector<double> ode_residual(const FlowSeries& series, SpaceKind space) {
    const auto& t = series.t_values;
    if (t.size() < 3 || series.areas.size() != t.size()) {
        throw InputError("ode_residual: need at least three samples");
    }
    const double step = t[1] - t[0];
    if (!(step > 0.0)) throw InputError("ode_residual: grid must be increasing");
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        if (std::abs((t[i + 1] - t[i]) - step) > 1e-9 * std::max(1.0, step)) {
            throw InputError("ode_residual: grid is not uniform");
        }
    }
    const double k = curvature(space);
    std::vector<double> residual;
    residual.reserve(t.size() - 2);
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        const auto& a = series.areas;
        const double second = (a[i + 1] - 2.0 * a[i] + a[i - 1]) / (step * step);
        residual.push_back(second - (-4.0 * k * a[i] + 8.0 * std::numbers::pi));
    }
    return residual;
}

ComparisonReport compare_analytic(const SurfaceMesh& mesh, const std::vector<double>& t_grid) {
    ComparisonReport report;
    report.summary = summarize(mesh);
    const SeriesCoefficients series = series_for(mesh.space, report.summary);
    report.analytic = sample_series(series, t_grid);
    report.discrete = flow_series(mesh, t_grid);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double area_err = std::abs(report.discrete.areas[i] - report.analytic.areas[i]) /
                                std::abs(report.analytic.areas[i]);
        const double vol_err = std::abs(report.discrete.volumes[i] - report.analytic.volumes[i]) /
                               std::abs(report.analytic.volumes[i]);
        report.max_rel_area_err = std::max(report.max_rel_area_err, area_err);
        report.max_rel_vol_err = std::max(report.max_rel_vol_err, vol_err);
    }
    return report;
}

std::vector<double> default_comparison_grid(SpaceKind space) {
    const double stop = space == SpaceKind::Spherical ? 0.9 * std::numbers::pi / 2.0 : 2.0;
    return uniform_grid(0.0, stop, 9);
}

}  // namespace minkflow
