#pragma once

#include <array>
#include <string>
#include <vector>

#include "minkflow/icosphere.hpp"
#include "minkflow/space.hpp"

namespace minkflow {

/// Number of functions in the radial perturbation basis.
inline constexpr int kPerturbationBasisSize = 9;

/// Perturbation basis on the parameter sphere, index 0..8:
/// {1, x, y, z, xy, yz, zx, x^2 - y^2, 3z^2 - 1}.
double perturbation_basis(int index, const Vec3& u);

struct Perturbation {
    int basis = 0;
    double amplitude = 0.0;
};

/// A closed surface given as a radial graph rho(u) over a center point:
/// rho(u) = base_radius * (1 + sum_i amplitude_i * f_i(u)).
struct RadialGraphSpec {
    SpaceKind space = SpaceKind::Euclidean;
    Point center{};
    double base_radius = 1.0;
    std::vector<Perturbation> perturbations;
    int subdivision = 5;

    double radius_at(const Vec3& u) const;
};

/// Unperturbed geodesic sphere of radius r about the canonical basepoint.
RadialGraphSpec sphere_spec(SpaceKind space, double r, int subdivision = 5);

/// The three integrals driving every closed form: A0 = |S|, dA0 = int_S H, V0.
struct GeometricSummary {
    double area = 0.0;
    double total_mean_curvature = 0.0;
    double volume = 0.0;
};

/// Sampled closed surface. `directions` are unit vectors on the parameter
/// sphere (coordinates in the tangent frame at `center`), `radii` the geodesic
/// distances from the center, `normals[i]` the outward unit normal at
/// vertices[i].
struct SurfaceMesh {
    SpaceKind space = SpaceKind::Euclidean;
    Point center{};
    std::array<Vec4, 3> frame{};
    std::vector<Point> vertices;
    std::vector<Vec3> directions;
    std::vector<double> radii;
    std::vector<Face> faces;
    std::vector<Vec4> normals;
    std::vector<double> solid_angle_weights;
    int subdivision_level = 0;

    TangentVector normal_at(std::size_t i) const { return {vertices[i], normals[i]}; }
};

SurfaceMesh build_radial_graph(const RadialGraphSpec& spec, int subdivision);
inline SurfaceMesh build_radial_graph(const RadialGraphSpec& spec) {
    return build_radial_graph(spec, spec.subdivision);
}

/// V - E + F of the mesh connectivity.
int euler_characteristic(const SurfaceMesh& mesh);

/// Outward unit vertex normals. Each incident face contributes the vector
/// metric-orthogonal to its two edges and to the vertex position, weighted by
/// 1/(|e1|^2 |e2|^2) (Max's weights, exact when the one-ring lies on a sphere),
/// then the sum is projected to the tangent space and normalized.
std::vector<Vec4> compute_vertex_normals(SpaceKind space, const std::vector<Point>& vertices,
                                         const std::vector<Face>& faces,
                                         const std::vector<Vec4>& radial_directions);

/// Recomputes the outward vertex normals from the current vertex positions.
void recompute_normals(SurfaceMesh& mesh);

/// Recomputes directions, radii and solid-angle weights from the vertex
/// positions (vertices seen from the center along geodesics).
void refresh_radial_data(SurfaceMesh& mesh);

/// Moves every vertex a signed geodesic distance t along its normal. Normals
/// are not recomputed; used for first-variation estimates.
std::vector<Point> offset_vertices(const SurfaceMesh& mesh, double t);

/// Sum of chordal triangle areas from the Gram determinant of edge vectors.
double surface_area(const SurfaceMesh& mesh);
double surface_area(SpaceKind space, const std::vector<Point>& vertices, const std::vector<Face>& faces);

/// Sum over vertices of solid-angle weight times the radial volume primitive.
double enclosed_volume(const SurfaceMesh& mesh);

/// First-variation estimate of int_S H: central difference of the area of the
/// +-h offset surfaces, with one Richardson level over {h, h/2}.
double total_mean_curvature(const SurfaceMesh& mesh, double h = 1e-4);

struct ConvexityReport {
    double min_principal_curvature_estimate = 0.0;
    bool is_plausibly_convex = false;
    double tolerance = 0.0;
    std::size_t skipped_vertices = 0;
};

/// Fits a quadratic height function over each vertex's tangent plane from the
/// one-ring in geodesic normal coordinates and reports the smallest shape
/// operator eigenvalue (positive = curving away from the outward normal).
ConvexityReport convexity_report(const SurfaceMesh& mesh);

inline constexpr double kDefaultMeanCurvatureStep = 1e-4;

GeometricSummary summarize(const SurfaceMesh& mesh);

}  // namespace minkflow
