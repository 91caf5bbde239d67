#include "minkflow/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "minkflow/errors.hpp"

namespace minkflow {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(const GeometricSummary& s) {
    if (!std::isfinite(s.area) || !std::isfinite(s.total_mean_curvature) || !std::isfinite(s.volume)) {
        throw InputError("geometric summary has non-finite entries");
    }
}

}  // namespace

double SeriesCoefficients::area(double t) const {
    const auto& s = summary;
    switch (space) {
        case SpaceKind::Euclidean: return 4.0 * kPi * t * t + s.total_mean_curvature * t + s.area;
        case SpaceKind::Hyperbolic:
            return 2.0 * kPi * r_hyp * std::exp(2.0 * t) + 2.0 * kPi * t_hyp * std::exp(-2.0 * t) - 2.0 * kPi;
        case SpaceKind::Spherical: return 2.0 * kPi - 2.0 * kPi * r_sph * std::cos(2.0 * t + theta);
    }
    return 0.0;
}

double SeriesCoefficients::area_rate(double t) const {
    switch (space) {
        case SpaceKind::Euclidean: return 8.0 * kPi * t + summary.total_mean_curvature;
        case SpaceKind::Hyperbolic:
            return 4.0 * kPi * r_hyp * std::exp(2.0 * t) - 4.0 * kPi * t_hyp * std::exp(-2.0 * t);
        case SpaceKind::Spherical: return 4.0 * kPi * r_sph * std::sin(2.0 * t + theta);
    }
    return 0.0;
}

double SeriesCoefficients::area_acceleration(double t) const {
    switch (space) {
        case SpaceKind::Euclidean: return 8.0 * kPi;
        case SpaceKind::Hyperbolic:
            return 8.0 * kPi * r_hyp * std::exp(2.0 * t) + 8.0 * kPi * t_hyp * std::exp(-2.0 * t);
        case SpaceKind::Spherical: return 8.0 * kPi * r_sph * std::cos(2.0 * t + theta);
    }
    return 0.0;
}

double SeriesCoefficients::volume(double t) const {
    const auto& s = summary;
    switch (space) {
        case SpaceKind::Euclidean:
            return 4.0 / 3.0 * kPi * t * t * t + 0.5 * s.total_mean_curvature * t * t + s.area * t + s.volume;
        case SpaceKind::Hyperbolic:
            return kPi * r_hyp * std::expm1(2.0 * t) - kPi * t_hyp * std::expm1(-2.0 * t) - 2.0 * kPi * t +
                   s.volume;
        case SpaceKind::Spherical:
            return 2.0 * kPi * t - kPi * r_sph * std::sin(2.0 * t + theta) + kPi * r_sph * std::sin(theta) +
                   s.volume;
    }
    return 0.0;
}

SeriesCoefficients euclidean_series(const GeometricSummary& s) {
    require_finite(s);
    SeriesCoefficients c;
    c.space = SpaceKind::Euclidean;
    c.summary = s;
    return c;
}

SeriesCoefficients hyperbolic_series(const GeometricSummary& s) {
    require_finite(s);
    SeriesCoefficients c;
    c.space = SpaceKind::Hyperbolic;
    c.summary = s;
    const double sum = 1.0 + s.area / (2.0 * kPi);
    const double diff = s.total_mean_curvature / (4.0 * kPi);
    c.r_hyp = 0.5 * (sum + diff);
    c.t_hyp = 0.5 * (sum - diff);
    return c;
}

SeriesCoefficients spherical_series(const GeometricSummary& s) {
    require_finite(s);
    SeriesCoefficients c;
    c.space = SpaceKind::Spherical;
    c.summary = s;
    const double x = 1.0 - s.area / (2.0 * kPi);
    const double y = s.total_mean_curvature / (4.0 * kPi);
    c.r_sph = std::hypot(x, y);
    if (c.r_sph == 0.0) {
        c.degenerate = true;
        c.theta = 0.0;
    } else {
        // In [0, pi] whenever dA0 >= 0; a flow restarted past the area maximum has dA0 < 0
        // and keeps the unclamped angle so the evaluators stay exact.
        c.theta = std::atan2(y, x);
    }
    return c;
}

SeriesCoefficients series_for(SpaceKind space, const GeometricSummary& s) {
    switch (space) {
        case SpaceKind::Euclidean: return euclidean_series(s);
        case SpaceKind::Hyperbolic: return hyperbolic_series(s);
        case SpaceKind::Spherical: return spherical_series(s);
    }
    return euclidean_series(s);
}

GeometricSummary sphere_geometry(SpaceKind space, double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw InputError("sphere_geometry: radius must be non-negative");
    switch (space) {
        case SpaceKind::Euclidean: return {4.0 * kPi * r * r, 8.0 * kPi * r, 4.0 / 3.0 * kPi * r * r * r};
        case SpaceKind::Hyperbolic: {
            const double sh = std::sinh(r);
            return {4.0 * kPi * sh * sh, 4.0 * kPi * std::sinh(2.0 * r), 4.0 * kPi * radial_volume_primitive(space, r)};
        }
        case SpaceKind::Spherical: {
            if (r > kPi / 2.0) throw InputError("sphere_geometry: spherical radius must not exceed pi/2");
            const double sn = std::sin(r);
            return {4.0 * kPi * sn * sn, 4.0 * kPi * std::sin(2.0 * r), 4.0 * kPi * radial_volume_primitive(space, r)};
        }
    }
    return {};
}

double equal_area_radius(SpaceKind space, double area) {
    if (!(area >= 0.0)) throw InputError("equal_area_radius: area must be non-negative");
    // A = 4 pi sn_K(r)^2, inverted without the cancellation of the cosh/cos forms.
    const double q = area / (4.0 * kPi);
    switch (space) {
        case SpaceKind::Euclidean: return std::sqrt(q);
        case SpaceKind::Hyperbolic: return std::asinh(std::sqrt(q));
        case SpaceKind::Spherical:
            if (q > 1.0) throw DomainError("equal_area_radius: spherical area exceeds 4 pi");
            return std::asin(std::sqrt(q));
    }
    return 0.0;
}

double equal_area_radius_rate(SpaceKind space, const GeometricSummary& s) {
    const double r0 = equal_area_radius(space, s.area);
    const double slope = sphere_geometry(space, r0).total_mean_curvature;
    if (!(std::abs(slope) > 1e-12)) {
        throw DegenerateError("equal_area_radius_rate: sphere area is stationary at the equal-area radius");
    }
    return s.total_mean_curvature / slope;
}

double hyperbolic_asymptotic_deficit(const GeometricSummary& s) {
    require_finite(s);
    return s.total_mean_curvature / 4.0 - s.volume -
           kPi * std::log1p(s.area / (2.0 * kPi) + s.total_mean_curvature / (4.0 * kPi));
}

double isoperimetric_gap(const SeriesCoefficients& c, double t) {
    switch (c.space) {
        case SpaceKind::Euclidean: {
            const double r = equal_area_radius(c.space, c.area(t));
            return 4.0 / 3.0 * kPi * r * r * r - c.volume(t);
        }
        case SpaceKind::Spherical: {
            const double r = equal_area_radius(c.space, c.area(t));
            return 2.0 * kPi * r - kPi * std::sin(2.0 * r) - c.volume(t);
        }
        case SpaceKind::Hyperbolic: {
            // cosh(2r) = R e^{2t} + T e^{-2t}; with eps = e^{-2t} every large term cancels analytically.
            const double R = c.r_hyp;
            const double T = c.t_hyp;
            const double eps = std::exp(-2.0 * t);
            const double scaled = R + T * eps * eps;  // cosh(2r) * eps
            if (!(scaled >= eps)) throw DomainError("isoperimetric_gap: negative area along the flow");
            const double cosh2r = R * std::exp(2.0 * t) + T * eps;
            const double sinh2r = std::sqrt(std::max(0.0, (cosh2r - 1.0) * (cosh2r + 1.0)));
            const double scaled_sinh = std::sqrt(std::max(0.0, (scaled - eps) * (scaled + eps)));
            return kPi * (2.0 * T * eps - 1.0 / (sinh2r + cosh2r)) - kPi * std::log(scaled + scaled_sinh) -
                   kPi * (T - R) - c.summary.volume;
        }
    }
    return 0.0;
}

AreaPeak spherical_area_peak(const SeriesCoefficients& c) {
    if (c.space != SpaceKind::Spherical) throw InputError("spherical_area_peak: series is not spherical");
    return {(kPi - c.theta) / 2.0, 2.0 * kPi * (c.r_sph + 1.0)};
}

namespace {

template <typename T, std::size_t N, std::size_t M>
std::array<T, N + M - 1> poly_mul(const std::array<T, N>& a, const std::array<T, M>& b) {
    std::array<T, N + M - 1> out{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < M; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// A(t) = A0 + dA0 t + 4 pi t^2,  V(t) = V0 + A0 t + dA0/2 t^2 + 4/3 pi t^3
template <typename T>
std::array<T, 7> deficit_polynomial(const T& area, const T& mean, const T& volume, const T& pi, const T& half,
                                    const T& four_thirds) {
    const std::array<T, 3> a{area, mean, T(4) * pi};
    const std::array<T, 4> v{volume, area, half * mean, four_thirds * pi};
    const auto cube = poly_mul(poly_mul(a, a), a);
    const auto square = poly_mul(v, v);
    std::array<T, 7> out{};
    for (std::size_t k = 0; k < 7; ++k) out[k] = cube[k] - T(36) * pi * square[k];
    return out;
}

}  // namespace

std::array<double, 7> isoperimetric_deficit_polynomial(const GeometricSummary& s) {
    require_finite(s);
    return deficit_polynomial<double>(s.area, s.total_mean_curvature, s.volume, kPi, 0.5, 4.0 / 3.0);
}

std::array<PiPolynomial, 7> isoperimetric_deficit_polynomial_exact(const PiPolynomial& area,
                                                                   const PiPolynomial& total_mean_curvature,
                                                                   const PiPolynomial& volume) {
    return deficit_polynomial<PiPolynomial>(area, total_mean_curvature, volume, PiPolynomial::monomial(1),
                                            PiPolynomial(Rational(1, 2)), PiPolynomial(Rational(4, 3)));
}

SeriesCoefficients rebase_series(const SeriesCoefficients& c, double t0) {
    if (!(t0 >= 0.0) || !std::isfinite(t0)) throw DomainError("rebase_series: t0 must be a finite non-negative time");
    if (c.space == SpaceKind::Spherical && t0 >= kPi / 2.0) {
        throw DomainError("rebase_series: spherical flow is only defined for t < pi/2");
    }
    return series_for(c.space, {c.area(t0), c.area_rate(t0), c.volume(t0)});
}

std::string_view provenance_name(Provenance p) noexcept {
    return p == Provenance::Analytic ? "analytic" : "discrete";
}

FlowSeries sample_series(const SeriesCoefficients& c, const std::vector<double>& t_grid) {
    FlowSeries out;
    out.provenance = Provenance::Analytic;
    for (double t : t_grid) {
        out.t_values.push_back(t);
        out.areas.push_back(c.area(t));
        out.volumes.push_back(c.volume(t));
    }
    return out;
}

std::vector<double> uniform_grid(double start, double stop, int count) {
    if (count < 1) throw InputError("uniform_grid: count must be positive");
    if (count == 1) return {start};
    std::vector<double> grid(static_cast<std::size_t>(count));
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = start + step * i;
    grid.back() = stop;
    return grid;
}

}  // namespace minkflow
