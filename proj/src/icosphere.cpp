#include "minkflow/icosphere.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "minkflow/errors.hpp"

namespace minkflow {

double dot(const Vec3& a, const Vec3& b) noexcept {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double triangle_solid_angle(const Vec3& a, const Vec3& b, const Vec3& c) noexcept {
    // Van Oosterom & Strackee
    const double la = std::sqrt(dot(a, a));
    const double lb = std::sqrt(dot(b, b));
    const double lc = std::sqrt(dot(c, c));
    const double triple = dot(a, cross(b, c));
    const double denom = la * lb * lc + dot(a, b) * lc + dot(b, c) * la + dot(c, a) * lb;
    return 2.0 * std::atan2(triple, denom);
}

namespace {

Vec3 normalized(const Vec3& v) {
    const double n = std::sqrt(dot(v, v));
    return {v[0] / n, v[1] / n, v[2] / n};
}

Icosphere icosahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    Icosphere ico;
    const std::array<Vec3, 12> raw = {{{-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
                                       {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
                                       {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}}};
    for (const auto& v : raw) ico.vertices.push_back(normalized(v));
    ico.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                 {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                 {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                 {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    return ico;
}

}  // namespace

Icosphere make_icosphere(int level) {
    if (level < 0 || level > 9) throw InputError("make_icosphere: level must be in [0, 9]");
    Icosphere ico = icosahedron();
    for (int l = 0; l < level; ++l) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoints;
        auto midpoint = [&](std::uint32_t a, std::uint32_t b) {
            const auto key = std::minmax(a, b);
            auto it = midpoints.find(key);
            if (it != midpoints.end()) return it->second;
            const Vec3& pa = ico.vertices[a];
            const Vec3& pb = ico.vertices[b];
            ico.vertices.push_back(normalized({pa[0] + pb[0], pa[1] + pb[1], pa[2] + pb[2]}));
            const auto idx = static_cast<std::uint32_t>(ico.vertices.size() - 1);
            midpoints.emplace(key, idx);
            return idx;
        };
        std::vector<Face> next;
        next.reserve(ico.faces.size() * 4);
        for (const Face& f : ico.faces) {
            const std::uint32_t ab = midpoint(f[0], f[1]);
            const std::uint32_t bc = midpoint(f[1], f[2]);
            const std::uint32_t ca = midpoint(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        ico.faces = std::move(next);
    }
    return ico;
}

}  // namespace minkflow
