#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace minkflow {

/// The three simply connected constant-curvature 3-spaces, keyed by curvature.
///
/// Euclidean space uses R^3 coordinates. The unit 3-sphere lives in R^4 with
/// the Euclidean inner product; hyperbolic space is the upper sheet of the
/// hyperboloid <x,x> = -1 in Minkowski space of signature (-,+,+,+).
enum class SpaceKind : int { Hyperbolic = -1, Euclidean = 0, Spherical = 1 };

int curvature(SpaceKind space) noexcept;
std::size_t ambient_dimension(SpaceKind space) noexcept;
SpaceKind space_from_curvature(int k);
std::string_view space_name(SpaceKind space) noexcept;
SpaceKind parse_space(std::string_view name);

/// Ambient coordinate vector. Euclidean space uses the first three slots and
/// keeps the fourth at zero, so every operation below is dimension-uniform.
struct Vec4 {
    std::array<double, 4> c{};

    double& operator[](std::size_t i) { return c[i]; }
    double operator[](std::size_t i) const { return c[i]; }

    Vec4& operator+=(const Vec4& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec4& operator-=(const Vec4& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec4& operator*=(double s) {
        for (double& v : c) v *= s;
        return *this;
    }
    friend Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
    friend Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
    friend Vec4 operator*(Vec4 a, double s) { return a *= s; }
    friend Vec4 operator*(double s, Vec4 a) { return a *= s; }
    friend Vec4 operator-(Vec4 a) { return a *= -1.0; }
    friend bool operator==(const Vec4&, const Vec4&) = default;

    std::span<const double> view(SpaceKind space) const;
};

/// A point of the model space. Use make_point() to validate external data.
struct Point {
    Vec4 x;
};

/// A tangent vector `dir` attached at `base`.
struct TangentVector {
    Point base;
    Vec4 dir;
};

/// Result of inverting the exponential map: unit initial direction and length.
struct GeodesicPolar {
    Vec4 direction;
    double distance = 0.0;
};

inline constexpr double kConstraintTolerance = 1e-12;

/// Ambient inner product; throws InputError on a dimension mismatch.
double ambient_inner(SpaceKind space, std::span<const double> a, std::span<const double> b);
double ambient_inner(SpaceKind space, const Vec4& a, const Vec4& b) noexcept;

/// Euclidean length of the raw coordinates (scale for relative residuals).
double coordinate_norm(const Vec4& v) noexcept;

/// The canonical basepoint: origin, or e0 on the sphere / hyperboloid.
Point basepoint(SpaceKind space) noexcept;

/// Relative violation of the model constraint, |<p,p> - K| / max(1, |p|^2).
/// Always 0 for Euclidean space; +inf for a point on the lower hyperboloid sheet.
double constraint_residual(SpaceKind space, const Point& p) noexcept;

/// Validates coordinates against the Point invariants (tolerance 1e-12).
Point make_point(SpaceKind space, std::span<const double> coords);

/// Pulls a nearly valid point back onto the model (sqrt|<p,p>| scaling).
Point renormalize(SpaceKind space, const Vec4& p) noexcept;

/// Geodesic from v.base with unit initial velocity v.dir, evaluated at t.
Point exp_map(SpaceKind space, const TangentVector& v, double t);

/// Velocity of that geodesic at time t (the radially transported direction).
Vec4 geodesic_velocity(SpaceKind space, const TangentVector& v, double t) noexcept;

/// Removes the component of w along p; identity in Euclidean space.
Vec4 project_to_tangent(SpaceKind space, const Point& p, const Vec4& w) noexcept;

/// Inverse exponential map at `base`. Distance 0 yields a zero direction.
GeodesicPolar log_map(SpaceKind space, const Point& base, const Point& p) noexcept;

double geodesic_distance(SpaceKind space, const Point& a, const Point& b) noexcept;

/// Scales a tangent vector to unit length under the ambient metric.
Vec4 normalize_tangent(SpaceKind space, const Vec4& v);

/// Orthonormal frame of the tangent space at `center`: the image of the
/// standard frame at the basepoint under the translation/rotation/boost that
/// carries the basepoint to `center`.
std::array<Vec4, 3> tangent_frame(SpaceKind space, const Point& center);

/// Integral of sn_K(s)^2 over [0, rho]: the volume per unit solid angle of a
/// geodesic ball, so a ball of radius r has volume 4*pi*F(r).
double radial_volume_primitive(SpaceKind space, double rho);

}  // namespace minkflow
