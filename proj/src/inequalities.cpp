#include "minkflow/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "minkflow/closed_form.hpp"
#include "minkflow/errors.hpp"
#include "minkflow/parallel.hpp"

namespace minkflow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBisectionTolerance = 1e-9;
constexpr double kScanFloor = -1e-9;

}  // namespace

DeficitReport make_deficit_report(std::string name, double deficit, double tol, const GeometricSummary& inputs) {
    DeficitReport r;
    r.name = std::move(name);
    r.deficit = deficit;
    r.tol = tol;
    r.holds = deficit >= -tol;
    r.equality = std::abs(deficit) <= tol;
    r.inputs = inputs;
    return r;
}

DeficitReport minkowski_deficit_euclidean(const GeometricSummary& s, double tol) {
    const double d = s.total_mean_curvature * s.total_mean_curvature - 16.0 * kPi * s.area;
    return make_deficit_report("minkowski_euclidean", d, tol, s);
}

DeficitReport minkowski_deficit_hyperbolic(const GeometricSummary& s, double tol) {
    const double d = s.total_mean_curvature - 4.0 * s.volume -
                     4.0 * kPi * std::log1p(s.area / (2.0 * kPi) + s.total_mean_curvature / (4.0 * kPi));
    return make_deficit_report("minkowski_hyperbolic", d, tol, s);
}

DeficitReport minkowski_deficit_spherical(const GeometricSummary& s, double tol) {
    if (s.area > 4.0 * kPi) throw DomainError("minkowski_deficit_spherical: area exceeds 4 pi");
    const double d =
        s.total_mean_curvature * s.total_mean_curvature - 16.0 * kPi * s.area * (1.0 - s.area / (4.0 * kPi));
    return make_deficit_report("minkowski_spherical", d, tol, s);
}

DeficitReport minkowski_deficit(SpaceKind space, const GeometricSummary& s, double tol) {
    switch (space) {
        case SpaceKind::Euclidean: return minkowski_deficit_euclidean(s, tol);
        case SpaceKind::Hyperbolic: return minkowski_deficit_hyperbolic(s, tol);
        case SpaceKind::Spherical: return minkowski_deficit_spherical(s, tol);
    }
    return minkowski_deficit_euclidean(s, tol);
}

double spherical_rigidity_indicator(const GeometricSummary& s) { return spherical_series(s).r_sph; }

std::vector<DeficitReport> weaker_inequalities_hyperbolic(const GeometricSummary& s, double tol) {
    std::vector<DeficitReport> out;
    out.push_back(make_deficit_report("hyperbolic_mean_vs_volume", s.total_mean_curvature - 4.0 * s.volume, tol, s));
    out.push_back(make_deficit_report("hyperbolic_mean_vs_area",
                                      s.total_mean_curvature * s.total_mean_curvature - s.area * s.area, tol, s));
    DeficitReport open = make_deficit_report(
        "hyperbolic_euclidean_form", s.total_mean_curvature * s.total_mean_curvature - 16.0 * kPi * s.area, tol, s);
    open.asserted = false;
    open.note = "open: not known whether the classical Minkowski inequality holds in hyperbolic space";
    out.push_back(open);
    return out;
}

DeficitReport false_inequality_eval(const GeometricSummary& s, double tol) {
    const double d =
        s.total_mean_curvature * s.total_mean_curvature - 16.0 * kPi * s.area * (1.0 + s.area / (4.0 * kPi));
    DeficitReport r = make_deficit_report("false_hyperbolic", d, tol, s);
    r.asserted = false;
    r.note = "informational: fails for large geodesic disks";
    return r;
}

GeometricSummary geodesic_disk_limits(double disk_radius) {
    if (!(disk_radius >= 0.0)) throw InputError("geodesic_disk_limits: radius must be non-negative");
    const double sh = std::sinh(disk_radius / 2.0);
    // cosh R - 1 = 2 sinh^2(R/2), exact near the point limit
    return {8.0 * kPi * sh * sh, 2.0 * kPi * kPi * std::sinh(disk_radius), 0.0};
}

CounterexampleResult counterexample_scan(double r_min, double r_max, double step) {
    if (!(r_min > 0.0) || !(r_max > r_min) || !(step > 0.0)) {
        throw InputError("counterexample_scan: need 0 < r_min < r_max and step > 0");
    }
    CounterexampleResult out;
    const auto count = static_cast<std::size_t>(std::floor((r_max - r_min) / step + 1e-9)) + 1;
    out.radii.resize(count);
    out.false_deficits.resize(count);
    out.minkowski_deficits.resize(count);
    out.weak_volume_deficits.resize(count);
    out.weak_area_deficits.resize(count);
    parallel_for(count, [&](std::size_t i) {
        const double radius = std::min(r_max, r_min + step * static_cast<double>(i));
        const GeometricSummary s = geodesic_disk_limits(radius);
        const auto weak = weaker_inequalities_hyperbolic(s);
        out.radii[i] = radius;
        out.false_deficits[i] = false_inequality_eval(s).deficit;
        out.minkowski_deficits[i] = minkowski_deficit_hyperbolic(s).deficit;
        out.weak_volume_deficits[i] = weak[0].deficit;
        out.weak_area_deficits[i] = weak[1].deficit;
    });

    out.min_asserted_deficit = std::min({*std::min_element(out.minkowski_deficits.begin(), out.minkowski_deficits.end()),
                                         *std::min_element(out.weak_volume_deficits.begin(), out.weak_volume_deficits.end()),
                                         *std::min_element(out.weak_area_deficits.begin(), out.weak_area_deficits.end())});
    out.asserted_inequalities_hold = out.min_asserted_deficit >= kScanFloor;

    for (std::size_t i = 0; i < count; ++i) {
        if (out.false_deficits[i] < 0.0) {
            out.first_violation_radius = out.radii[i];
            // the deficit is positive near the point limit, so (0, r_min] brackets a first-point violation
            double lo = i > 0 ? out.radii[i - 1] : r_min * 1e-3;
            double hi = out.radii[i];
            auto deficit = [](double r) { return false_inequality_eval(geodesic_disk_limits(r)).deficit; };
            while (hi - lo > kBisectionTolerance) {
                const double mid = 0.5 * (lo + hi);
                (deficit(mid) < 0.0 ? hi : lo) = mid;
            }
            out.bisected_threshold = 0.5 * (lo + hi);
            break;
        }
    }
    return out;
}

SmallSurfaceReduction small_surface_reduction(const GeometricSummary& s) {
    SmallSurfaceReduction r;
    r.x = s.total_mean_curvature / (4.0 * kPi);
    r.exact_lhs = std::expm1(r.x) - r.x;
    r.exact_rhs = s.area / (2.0 * kPi);
    r.second_order_deficit = s.total_mean_curvature * s.total_mean_curvature - 16.0 * kPi * s.area;
    // algebraically e^x - 1 - x - x^2/2, independent of A0
    r.remainder = (r.exact_lhs - r.exact_rhs) - r.second_order_deficit / (32.0 * kPi * kPi);
    const double x = r.x;
    r.within_cubic_bound = std::abs(r.remainder) <= std::abs(x * x * x);
    return r;
}

}  // namespace minkflow
