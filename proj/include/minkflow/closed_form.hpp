#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "minkflow/pi_polynomial.hpp"
#include "minkflow/space.hpp"
#include "minkflow/surface.hpp"

namespace minkflow {

/// Closed-form area/volume of the parallel surfaces S_t, driven by the
/// summary (A0, dA0, V0) of S = S_0. The area solves A'' = -4K A + 8 pi and
/// the volume is its antiderivative with V(0) = V0.
///
///   K =  0:  A = 4 pi t^2 + dA0 t + A0
///   K = -1:  A = 2 pi R e^{2t} + 2 pi T e^{-2t} - 2 pi,
///            R + T = 1 + A0/2pi,  R - T = dA0/4pi
///   K = +1:  A = 2 pi - 2 pi R cos(2t + theta),
///            R cos(theta) = 1 - A0/2pi,  R sin(theta) = dA0/4pi
struct SeriesCoefficients {
    SpaceKind space = SpaceKind::Euclidean;
    GeometricSummary summary;
    double r_hyp = 0.0;
    double t_hyp = 0.0;
    double r_sph = 0.0;
    double theta = 0.0;
    // Set when R_sph vanishes (A0 = 2 pi, dA0 = 0); theta is then 0 by convention.
    bool degenerate = false;

    double area(double t) const;
    double area_rate(double t) const;
    double area_acceleration(double t) const;
    double volume(double t) const;
};

SeriesCoefficients euclidean_series(const GeometricSummary& s);
SeriesCoefficients hyperbolic_series(const GeometricSummary& s);
SeriesCoefficients spherical_series(const GeometricSummary& s);
SeriesCoefficients series_for(SpaceKind space, const GeometricSummary& s);

/// (A(r), dA/dr, V(r)) for the geodesic sphere of radius r.
GeometricSummary sphere_geometry(SpaceKind space, double r);

/// Radius of the geodesic sphere with area A.
double equal_area_radius(SpaceKind space, double area);

/// dr/dt at t = 0 for the equal-area radius of the flow of s.
double equal_area_radius_rate(SpaceKind space, const GeometricSummary& s);

/// lim_{t->inf} V(r(t)) - V(t) in hyperbolic space:
/// dA0/4 - V0 - pi log(1 + A0/2pi + dA0/4pi).
double hyperbolic_asymptotic_deficit(const GeometricSummary& s);

/// V(r(t)) - V(t): volume of the equal-area sphere minus the enclosed volume.
/// The hyperbolic branch is rearranged to avoid cancelling e^{2t} terms, so it
/// stays accurate for large t.
double isoperimetric_gap(const SeriesCoefficients& c, double t);

/// Time and value of the spherical area maximum, t = (pi - theta)/2 and 2 pi (R + 1).
struct AreaPeak {
    double t = 0.0;
    double area = 0.0;
};
AreaPeak spherical_area_peak(const SeriesCoefficients& c);

/// Coefficients (t^0 .. t^6) of A(t)^3 - 36 pi V(t)^2 for the Euclidean flow.
std::array<double, 7> isoperimetric_deficit_polynomial(const GeometricSummary& s);

/// Same expansion in exact arithmetic with inputs given as rational polynomials in pi.
std::array<PiPolynomial, 7> isoperimetric_deficit_polynomial_exact(const PiPolynomial& area,
                                                                   const PiPolynomial& total_mean_curvature,
                                                                   const PiPolynomial& volume);

/// Series of the flow restarted from S_{t0}: A_new(s) = A_old(t0 + s).
SeriesCoefficients rebase_series(const SeriesCoefficients& c, double t0);

enum class Provenance { Analytic, Discrete };
std::string_view provenance_name(Provenance p) noexcept;

/// Sampled t -> (A, V) trajectory.
struct FlowSeries {
    std::vector<double> t_values;
    std::vector<double> areas;
    std::vector<double> volumes;
    Provenance provenance = Provenance::Analytic;
};

FlowSeries sample_series(const SeriesCoefficients& c, const std::vector<double>& t_grid);

/// `count` evenly spaced values from start to stop inclusive.
std::vector<double> uniform_grid(double start, double stop, int count);

}  // namespace minkflow
