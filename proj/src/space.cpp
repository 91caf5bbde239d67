#include "minkflow/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "minkflow/errors.hpp"

namespace minkflow {

namespace {

// Unit/tangency checks on caller-supplied directions, relative to coordinate scale.
constexpr double kDirectionTolerance = 1e-9;

}  // namespace

int curvature(SpaceKind space) noexcept { return static_cast<int>(space); }

std::size_t ambient_dimension(SpaceKind space) noexcept {
    return space == SpaceKind::Euclidean ? 3 : 4;
}

SpaceKind space_from_curvature(int k) {
    switch (k) {
        case -1: return SpaceKind::Hyperbolic;
        case 0: return SpaceKind::Euclidean;
        case 1: return SpaceKind::Spherical;
        default: throw InputError("curvature must be -1, 0 or +1, got " + std::to_string(k));
    }
}

std::string_view space_name(SpaceKind space) noexcept {
    switch (space) {
        case SpaceKind::Hyperbolic: return "hyperbolic";
        case SpaceKind::Euclidean: return "euclidean";
        case SpaceKind::Spherical: return "spherical";
    }
    return "euclidean";
}

SpaceKind parse_space(std::string_view name) {
    if (name == "hyperbolic") return SpaceKind::Hyperbolic;
    if (name == "euclidean") return SpaceKind::Euclidean;
    if (name == "spherical") return SpaceKind::Spherical;
    throw InputError("unknown space '" + std::string(name) + "'");
}

std::span<const double> Vec4::view(SpaceKind space) const {
    return std::span<const double>(c.data(), ambient_dimension(space));
}

double ambient_inner(SpaceKind space, std::span<const double> a, std::span<const double> b) {
    const std::size_t dim = ambient_dimension(space);
    if (a.size() != dim || b.size() != dim) {
        throw InputError("ambient_inner: expected vectors of dimension " + std::to_string(dim));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < dim; ++i) sum += a[i] * b[i];
    if (space == SpaceKind::Hyperbolic) sum -= 2.0 * a[0] * b[0];
    return sum;
}

double ambient_inner(SpaceKind space, const Vec4& a, const Vec4& b) noexcept {
    const double spatial = a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
    if (space == SpaceKind::Hyperbolic) return -a[0] * b[0] + spatial;
    return a[0] * b[0] + spatial;
}

double coordinate_norm(const Vec4& v) noexcept {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

Point basepoint(SpaceKind space) noexcept {
    Point p;
    if (space != SpaceKind::Euclidean) p.x[0] = 1.0;
    return p;
}

double constraint_residual(SpaceKind space, const Point& p) noexcept {
    if (space == SpaceKind::Euclidean) return 0.0;
    if (space == SpaceKind::Hyperbolic && p.x[0] <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double target = space == SpaceKind::Spherical ? 1.0 : -1.0;
    const double scale = std::max(1.0, coordinate_norm(p.x) * coordinate_norm(p.x));
    return std::abs(ambient_inner(space, p.x, p.x) - target) / scale;
}

Point make_point(SpaceKind space, std::span<const double> coords) {
    if (coords.size() != ambient_dimension(space)) {
        throw InputError("make_point: wrong coordinate count for " + std::string(space_name(space)));
    }
    Point p;
    std::copy(coords.begin(), coords.end(), p.x.c.begin());
    if (constraint_residual(space, p) > kConstraintTolerance) {
        throw InputError("make_point: coordinates do not lie on the " + std::string(space_name(space)) +
                         " model");
    }
    return p;
}

Point renormalize(SpaceKind space, const Vec4& p) noexcept {
    if (space == SpaceKind::Euclidean) return Point{p};
    const double q = std::abs(ambient_inner(space, p, p));
    return Point{p * (1.0 / std::sqrt(q))};
}

namespace {

void check_unit_tangent(SpaceKind space, const TangentVector& v) {
    const double scale = std::max(1.0, coordinate_norm(v.base.x) * coordinate_norm(v.dir));
    const double dir_scale = std::max(1.0, coordinate_norm(v.dir) * coordinate_norm(v.dir));
    if (space != SpaceKind::Euclidean &&
        std::abs(ambient_inner(space, v.base.x, v.dir)) > kDirectionTolerance * scale) {
        throw InputError("exp_map: direction is not tangent at the base point");
    }
    if (std::abs(ambient_inner(space, v.dir, v.dir) - 1.0) > kDirectionTolerance * dir_scale) {
        throw InputError("exp_map: direction is not a unit vector");
    }
}

}  // namespace

Point exp_map(SpaceKind space, const TangentVector& v, double t) {
    check_unit_tangent(space, v);
    switch (space) {
        case SpaceKind::Euclidean: return Point{v.base.x + t * v.dir};
        case SpaceKind::Spherical:
            return renormalize(space, std::cos(t) * v.base.x + std::sin(t) * v.dir);
        case SpaceKind::Hyperbolic:
            return renormalize(space, std::cosh(t) * v.base.x + std::sinh(t) * v.dir);
    }
    return v.base;
}

Vec4 geodesic_velocity(SpaceKind space, const TangentVector& v, double t) noexcept {
    switch (space) {
        case SpaceKind::Euclidean: return v.dir;
        case SpaceKind::Spherical: return -std::sin(t) * v.base.x + std::cos(t) * v.dir;
        case SpaceKind::Hyperbolic: return std::sinh(t) * v.base.x + std::cosh(t) * v.dir;
    }
    return v.dir;
}

Vec4 project_to_tangent(SpaceKind space, const Point& p, const Vec4& w) noexcept {
    if (space == SpaceKind::Euclidean) return w;
    const double pp = ambient_inner(space, p.x, p.x);
    return w - (ambient_inner(space, w, p.x) / pp) * p.x;
}

GeodesicPolar log_map(SpaceKind space, const Point& base, const Point& p) noexcept {
    GeodesicPolar out;
    Vec4 w;
    double s = 0.0;
    switch (space) {
        case SpaceKind::Euclidean:
            w = p.x - base.x;
            s = std::sqrt(ambient_inner(space, w, w));
            out.distance = s;
            break;
        case SpaceKind::Spherical: {
            const double c = ambient_inner(space, base.x, p.x);
            w = p.x - c * base.x;
            s = std::sqrt(std::max(0.0, ambient_inner(space, w, w)));
            out.distance = std::atan2(s, c);
            break;
        }
        case SpaceKind::Hyperbolic: {
            const double c = -ambient_inner(space, base.x, p.x);
            w = p.x - c * base.x;
            s = std::sqrt(std::max(0.0, ambient_inner(space, w, w)));
            out.distance = std::asinh(s);
            break;
        }
    }
    if (s > 0.0) out.direction = w * (1.0 / s);
    return out;
}

double geodesic_distance(SpaceKind space, const Point& a, const Point& b) noexcept {
    return log_map(space, a, b).distance;
}

Vec4 normalize_tangent(SpaceKind space, const Vec4& v) {
    const double n2 = ambient_inner(space, v, v);
    if (!(n2 > 0.0)) throw NumericError("normalize_tangent: vector has non-positive squared length");
    return v * (1.0 / std::sqrt(n2));
}

std::array<Vec4, 3> tangent_frame(SpaceKind space, const Point& center) {
    std::array<Vec4, 3> frame{};
    const std::size_t offset = space == SpaceKind::Euclidean ? 0 : 1;
    for (std::size_t i = 0; i < 3; ++i) frame[i][i + offset] = 1.0;
    if (space == SpaceKind::Euclidean) return frame;

    if (constraint_residual(space, center) > kConstraintTolerance) {
        throw InputError("tangent_frame: center is not a valid point");
    }
    Vec4 spatial = center.x;
    spatial[0] = 0.0;
    const double sn = coordinate_norm(spatial);
    if (sn == 0.0) {
        // center is +e0 or (spherical only) its antipode -e0
        if (center.x[0] < 0.0) frame[0][1] = -1.0;
        return frame;
    }
    const Vec4 axis = spatial * (1.0 / sn);
    Vec4 e0;
    e0[0] = 1.0;
    const double cs = center.x[0];  // cos(alpha) or cosh(beta)
    // Rotation (sphere) or boost (hyperboloid) in the (e0, axis) plane.
    const Vec4 shift = space == SpaceKind::Spherical ? (cs - 1.0) * axis - sn * e0
                                                      : (cs - 1.0) * axis + sn * e0;
    for (Vec4& f : frame) {
        const double along = f[1] * axis[1] + f[2] * axis[2] + f[3] * axis[3];
        f += along * shift;
    }
    return frame;
}

double radial_volume_primitive(SpaceKind space, double rho) {
    if (!(rho >= 0.0)) throw InputError("radial_volume_primitive: rho must be non-negative");
    const double r2 = rho * rho;
    switch (space) {
        case SpaceKind::Euclidean: return rho * r2 / 3.0;
        case SpaceKind::Hyperbolic:
            if (rho < 1e-2) return rho * r2 * (1.0 / 3.0 + r2 * (1.0 / 15.0 + r2 * 2.0 / 315.0));
            return std::sinh(2.0 * rho) / 4.0 - rho / 2.0;
        case SpaceKind::Spherical:
            if (rho >= std::numbers::pi) {
                throw DomainError("radial_volume_primitive: spherical radius must be below pi");
            }
            if (rho < 1e-2) return rho * r2 * (1.0 / 3.0 - r2 * (1.0 / 15.0 - r2 * 2.0 / 315.0));
            return rho / 2.0 - std::sin(2.0 * rho) / 4.0;
    }
    return 0.0;
}

}  // namespace minkflow
