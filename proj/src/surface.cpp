#include "minkflow/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "minkflow/errors.hpp"
#include "minkflow/parallel.hpp"

namespace minkflow {

double perturbation_basis(int index, const Vec3& u) {
    const double x = u[0], y = u[1], z = u[2];
    switch (index) {
        case 0: return 1.0;
        case 1: return x;
        case 2: return y;
        case 3: return z;
        case 4: return x * y;
        case 5: return y * z;
        case 6: return z * x;
        case 7: return x * x - y * y;
        case 8: return 3.0 * z * z - 1.0;
        default: throw SpecError("perturbation basis index must be in [0, 8], got " + std::to_string(index));
    }
}

double RadialGraphSpec::radius_at(const Vec3& u) const {
    double factor = 1.0;
    for (const Perturbation& p : perturbations) factor += p.amplitude * perturbation_basis(p.basis, u);
    return base_radius * factor;
}

RadialGraphSpec sphere_spec(SpaceKind space, double r, int subdivision) {
    RadialGraphSpec spec;
    spec.space = space;
    spec.center = basepoint(space);
    spec.base_radius = r;
    spec.subdivision = subdivision;
    return spec;
}

namespace {

// Vector metric-orthogonal to a, b and c (c ignored in Euclidean space).
Vec4 orthogonal_complement(SpaceKind space, const Vec4& a, const Vec4& b, const Vec4& c) {
    Vec4 n;
    if (space == SpaceKind::Euclidean) {
        n[0] = a[1] * b[2] - a[2] * b[1];
        n[1] = a[2] * b[0] - a[0] * b[2];
        n[2] = a[0] * b[1] - a[1] * b[0];
        return n;
    }
    auto det3 = [](double a0, double a1, double a2, double b0, double b1, double b2, double c0,
                   double c1, double c2) {
        return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
    };
    n[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
    n[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
    n[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
    n[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
    // Euclidean cofactors are orthogonal in the dot product; raise the index for Minkowski.
    if (space == SpaceKind::Hyperbolic) n[0] = -n[0];
    return n;
}

Vec3 frame_coordinates(SpaceKind space, const std::array<Vec4, 3>& frame, const Vec4& v) {
    return {ambient_inner(space, v, frame[0]), ambient_inner(space, v, frame[1]),
            ambient_inner(space, v, frame[2])};
}

void assign_solid_angle_weights(SurfaceMesh& mesh) {
    const std::size_t nf = mesh.faces.size();
    std::vector<double> omega(nf);
    parallel_for(nf, [&](std::size_t f) {
        const Face& face = mesh.faces[f];
        omega[f] = triangle_solid_angle(mesh.directions[face[0]], mesh.directions[face[1]],
                                        mesh.directions[face[2]]);
    });
    for (double w : omega) {
        if (!(w > 0.0)) throw ConstructionError("surface is not a radial graph about its center");
    }
    std::vector<std::vector<double>> incident(mesh.vertices.size());
    for (std::size_t f = 0; f < nf; ++f) {
        for (std::uint32_t v : mesh.faces[f]) incident[v].push_back(omega[f] / 3.0);
    }
    mesh.solid_angle_weights.assign(mesh.vertices.size(), 0.0);
    for (std::size_t v = 0; v < incident.size(); ++v) {
        mesh.solid_angle_weights[v] = pairwise_sum(incident[v]);
    }
    const double total = pairwise_sum(mesh.solid_angle_weights);
    const double scale = 4.0 * std::numbers::pi / total;
    for (double& w : mesh.solid_angle_weights) w *= scale;
}

std::vector<Vec4> radial_directions(const SurfaceMesh& mesh) {
    std::vector<Vec4> radial(mesh.vertices.size());
    parallel_for(mesh.vertices.size(), [&](std::size_t i) {
        const GeodesicPolar polar = log_map(mesh.space, mesh.center, mesh.vertices[i]);
        radial[i] = geodesic_velocity(mesh.space, {mesh.center, polar.direction}, polar.distance);
    });
    return radial;
}

}  // namespace

std::vector<Vec4> compute_vertex_normals(SpaceKind space, const std::vector<Point>& vertices,
                                         const std::vector<Face>& faces,
                                         const std::vector<Vec4>& radial_dirs) {
    const std::size_t nv = vertices.size();
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> fans(nv);
    for (const Face& f : faces) {
        fans[f[0]].emplace_back(f[1], f[2]);
        fans[f[1]].emplace_back(f[2], f[0]);
        fans[f[2]].emplace_back(f[0], f[1]);
    }
    std::vector<Vec4> normals(nv);
    parallel_for(nv, [&](std::size_t i) {
        const Vec4& p = vertices[i].x;
        Vec4 sum;
        for (const auto& [j, k] : fans[i]) {
            const Vec4 e1 = vertices[j].x - p;
            const Vec4 e2 = vertices[k].x - p;
            Vec4 n = orthogonal_complement(space, e1, e2, p);
            if (ambient_inner(space, n, radial_dirs[i]) < 0.0) n = -n;
            const double weight = 1.0 / (ambient_inner(space, e1, e1) * ambient_inner(space, e2, e2));
            sum += weight * n;
        }
        const Vec4 tangent = project_to_tangent(space, vertices[i], sum);
        const double n2 = ambient_inner(space, tangent, tangent);
        if (!(n2 > 0.0) || !std::isfinite(n2)) {
            throw ConstructionError("degenerate vertex normal at vertex " + std::to_string(i));
        }
        normals[i] = tangent * (1.0 / std::sqrt(n2));
    });
    return normals;
}

void recompute_normals(SurfaceMesh& mesh) {
    mesh.normals = compute_vertex_normals(mesh.space, mesh.vertices, mesh.faces, radial_directions(mesh));
}

void refresh_radial_data(SurfaceMesh& mesh) {
    const std::size_t nv = mesh.vertices.size();
    mesh.directions.resize(nv);
    mesh.radii.resize(nv);
    parallel_for(nv, [&](std::size_t i) {
        const GeodesicPolar polar = log_map(mesh.space, mesh.center, mesh.vertices[i]);
        mesh.radii[i] = polar.distance;
        mesh.directions[i] = frame_coordinates(mesh.space, mesh.frame, polar.direction);
    });
    assign_solid_angle_weights(mesh);
}

SurfaceMesh build_radial_graph(const RadialGraphSpec& spec, int subdivision) {
    if (!(spec.base_radius > 0.0)) throw SpecError("base_radius must be positive");
    for (const Perturbation& p : spec.perturbations) {
        if (p.basis < 0 || p.basis >= kPerturbationBasisSize) {
            throw SpecError("perturbation basis index must be in [0, 8], got " + std::to_string(p.basis));
        }
        if (!std::isfinite(p.amplitude)) throw SpecError("perturbation amplitude must be finite");
    }
    if (subdivision < 0) throw InputError("subdivision must be non-negative");

    const Icosphere ico = make_icosphere(subdivision);
    SurfaceMesh mesh;
    mesh.space = spec.space;
    mesh.center = spec.center;
    mesh.frame = tangent_frame(spec.space, spec.center);
    mesh.faces = ico.faces;
    mesh.subdivision_level = subdivision;
    mesh.directions = ico.vertices;

    const std::size_t nv = ico.vertices.size();
    mesh.radii.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        const double rho = spec.radius_at(ico.vertices[i]);
        if (!(rho > 0.0)) throw SpecError("radial function is not positive on the sample grid");
        if (spec.space == SpaceKind::Spherical && rho >= std::numbers::pi / 2.0) {
            throw SpecError("spherical radial graph must stay inside the open hemisphere (rho < pi/2)");
        }
        mesh.radii[i] = rho;
    }

    mesh.vertices.resize(nv);
    parallel_for(nv, [&](std::size_t i) {
        const Vec3& u = ico.vertices[i];
        const Vec4 dir = u[0] * mesh.frame[0] + u[1] * mesh.frame[1] + u[2] * mesh.frame[2];
        mesh.vertices[i] = exp_map(spec.space, {spec.center, normalize_tangent(spec.space, dir)}, mesh.radii[i]);
    });
    assign_solid_angle_weights(mesh);
    recompute_normals(mesh);
    return mesh;
}

int euler_characteristic(const SurfaceMesh& mesh) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const Face& f : mesh.faces) {
        for (int e = 0; e < 3; ++e) edges.insert(std::minmax(f[e], f[(e + 1) % 3]));
    }
    return static_cast<int>(mesh.vertices.size()) - static_cast<int>(edges.size()) +
           static_cast<int>(mesh.faces.size());
}

std::vector<Point> offset_vertices(const SurfaceMesh& mesh, double t) {
    std::vector<Point> out(mesh.vertices.size());
    parallel_for(out.size(), [&](std::size_t i) { out[i] = exp_map(mesh.space, mesh.normal_at(i), t); });
    return out;
}

double surface_area(SpaceKind space, const std::vector<Point>& vertices, const std::vector<Face>& faces) {
    std::vector<double> areas(faces.size());
    parallel_for(faces.size(), [&](std::size_t f) {
        const Vec4& p0 = vertices[faces[f][0]].x;
        const Vec4 e1 = vertices[faces[f][1]].x - p0;
        const Vec4 e2 = vertices[faces[f][2]].x - p0;
        const double g11 = ambient_inner(space, e1, e1);
        const double g22 = ambient_inner(space, e2, e2);
        const double g12 = ambient_inner(space, e1, e2);
        double gram = g11 * g22 - g12 * g12;
        if (gram < 0.0) {
            // rounding on a needle triangle, or a timelike face plane in Minkowski space
            if (gram < -1e-14 * std::abs(g11 * g22)) {
                throw NumericError("negative Gram determinant on face " + std::to_string(f));
            }
            gram = 0.0;
        }
        areas[f] = 0.5 * std::sqrt(gram);
    });
    return pairwise_sum(areas);
}

double surface_area(const SurfaceMesh& mesh) { return surface_area(mesh.space, mesh.vertices, mesh.faces); }

double enclosed_volume(const SurfaceMesh& mesh) {
    if (mesh.radii.size() != mesh.vertices.size() || mesh.solid_angle_weights.size() != mesh.vertices.size()) {
        throw InputError("enclosed_volume: mesh lacks radial data");
    }
    std::vector<double> terms(mesh.vertices.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        terms[i] = mesh.solid_angle_weights[i] * radial_volume_primitive(mesh.space, mesh.radii[i]);
    }
    return pairwise_sum(terms);
}

double total_mean_curvature(const SurfaceMesh& mesh, double h) {
    if (!(h > 0.0)) throw InputError("total_mean_curvature: step must be positive");
    if (h > 1e-3) throw InputError("total_mean_curvature: step must not exceed 1e-3");
    auto central = [&](double step) {
        const double plus = surface_area(mesh.space, offset_vertices(mesh, step), mesh.faces);
        const double minus = surface_area(mesh.space, offset_vertices(mesh, -step), mesh.faces);
        return (plus - minus) / (2.0 * step);
    };
    const double coarse = central(h);
    const double fine = central(h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

namespace {

// Orthonormal tangent basis at p orthogonal to the unit normal nu.
std::array<Vec4, 2> tangent_plane_basis(SpaceKind space, const Point& p, const Vec4& nu) {
    std::array<Vec4, 2> basis{};
    std::size_t found = 0;
    for (std::size_t axis = 0; axis < 4 && found < 2; ++axis) {
        Vec4 candidate;
        candidate[axis] = 1.0;
        if (space == SpaceKind::Euclidean && axis == 3) break;
        Vec4 v = project_to_tangent(space, p, candidate);
        v -= ambient_inner(space, v, nu) * nu;
        for (std::size_t k = 0; k < found; ++k) v -= ambient_inner(space, v, basis[k]) * basis[k];
        const double n2 = ambient_inner(space, v, v);
        if (n2 > 1e-6 * std::max(1.0, coordinate_norm(v) * coordinate_norm(v))) {
            basis[found++] = v * (1.0 / std::sqrt(n2));
        }
    }
    if (found < 2) throw NumericError("could not build a tangent basis");
    return basis;
}

}  // namespace

ConvexityReport convexity_report(const SurfaceMesh& mesh) {
    const std::size_t nv = mesh.vertices.size();
    std::vector<std::set<std::uint32_t>> rings(nv);
    for (const Face& f : mesh.faces) {
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                if (a != b) rings[f[a]].insert(f[b]);
            }
        }
    }
    constexpr double kSkipped = std::numeric_limits<double>::infinity();
    std::vector<double> min_curv(nv, kSkipped);
    parallel_for(nv, [&](std::size_t i) {
        if (rings[i].size() < 5) return;
        const Point& p = mesh.vertices[i];
        const Vec4& nu = mesh.normals[i];
        const auto basis = tangent_plane_basis(mesh.space, p, nu);
        Eigen::MatrixXd design(rings[i].size(), 5);
        Eigen::VectorXd height(rings[i].size());
        Eigen::Index row = 0;
        for (std::uint32_t j : rings[i]) {
            const GeodesicPolar polar = log_map(mesh.space, p, mesh.vertices[j]);
            const Vec4 v = polar.distance * polar.direction;
            const double x = ambient_inner(mesh.space, v, basis[0]);
            const double y = ambient_inner(mesh.space, v, basis[1]);
            design.row(row) << x, y, 0.5 * x * x, x * y, 0.5 * y * y;
            height(row) = ambient_inner(mesh.space, v, nu);
            ++row;
        }
        const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(height);
        Eigen::Matrix2d shape;
        shape << -coef(2), -coef(3), -coef(3), -coef(4);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(shape, Eigen::EigenvaluesOnly);
        min_curv[i] = eig.eigenvalues()(0);
    });

    ConvexityReport report;
    report.tolerance = 10.0 * std::pow(4.0, -mesh.subdivision_level);
    report.min_principal_curvature_estimate = kSkipped;
    for (double c : min_curv) {
        if (c == kSkipped) {
            ++report.skipped_vertices;
        } else {
            report.min_principal_curvature_estimate = std::min(report.min_principal_curvature_estimate, c);
        }
    }
    report.is_plausibly_convex = report.skipped_vertices < nv &&
                                 report.min_principal_curvature_estimate >= -report.tolerance;
    return report;
}

GeometricSummary summarize(const SurfaceMesh& mesh) {
    GeometricSummary s;
    s.area = surface_area(mesh);
    s.total_mean_curvature = total_mean_curvature(mesh, kDefaultMeanCurvatureStep);
    s.volume = enclosed_volume(mesh);
    return s;
}

}  // namespace minkflow
