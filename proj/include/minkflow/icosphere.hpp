#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace minkflow {

using Vec3 = std::array<double, 3>;
using Face = std::array<std::uint32_t, 3>;

/// Unit icosphere: vertices on S^2, faces wound counter-clockwise seen from
/// outside. Level n has 10*4^n + 2 vertices and 20*4^n faces.
struct Icosphere {
    std::vector<Vec3> vertices;
    std::vector<Face> faces;
};

Icosphere make_icosphere(int level);

double dot(const Vec3& a, const Vec3& b) noexcept;
Vec3 cross(const Vec3& a, const Vec3& b) noexcept;

/// Signed solid angle of the flat triangle (a, b, c) seen from the origin.
double triangle_solid_angle(const Vec3& a, const Vec3& b, const Vec3& c) noexcept;

}  // namespace minkflow
