#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "minkflow/errors.hpp"
#include "minkflow/icosphere.hpp"
#include "minkflow/surface.hpp"
#include "oracles.hpp"

using namespace minkflow;
using oracle::pi;

namespace {

struct SphereCase {
    SpaceKind space;
    double r;
};

constexpr SphereCase kSpheres[] = {
    {SpaceKind::Euclidean, 1.0}, {SpaceKind::Hyperbolic, 1.0}, {SpaceKind::Spherical, pi / 4}};

RadialGraphSpec graph(SpaceKind s, double base, std::vector<Perturbation> p) {
    RadialGraphSpec spec = sphere_spec(s, base);
    spec.perturbations = std::move(p);
    return spec;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("icosphere") {
    TEST_CASE("combinatorics and winding") {
        for (int n = 0; n <= 4; ++n) {
            const Icosphere ico = make_icosphere(n);
            const std::size_t p = std::size_t{1} << (2 * n);
            CHECK(ico.vertices.size() == 10 * p + 2);
            CHECK(ico.faces.size() == 20 * p);
            std::map<std::pair<std::uint32_t, std::uint32_t>, int> directed;
            for (const Face& f : ico.faces) {
                const Vec3 &a = ico.vertices[f[0]], &b = ico.vertices[f[1]], &c = ico.vertices[f[2]];
                const Vec3 ab{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
                const Vec3 ac{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
                const Vec3 centroid{a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]};
                CHECK(dot(cross(ab, ac), centroid) > 0.0);
                for (int k = 0; k < 3; ++k) directed[{f[k], f[(k + 1) % 3]}] += 1;
            }
            // closed, consistently oriented: each directed edge once, its reverse once
            bool manifold = true;
            for (const auto& [e, count] : directed) {
                manifold = manifold && count == 1 && directed.count({e.second, e.first}) == 1;
            }
            CHECK(manifold);
            for (const Vec3& v : ico.vertices) CHECK(std::sqrt(dot(v, v)) == doctest::Approx(1.0).epsilon(1e-15));
        }
        CHECK_THROWS_AS(make_icosphere(-1), InputError);
        CHECK_THROWS_AS(make_icosphere(10), InputError);
    }

    TEST_CASE("triangle solid angle") {
        CHECK(triangle_solid_angle({1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == doctest::Approx(pi / 2));
        const Icosphere ico = make_icosphere(3);
        double total = 0.0;
        for (const Face& f : ico.faces) {
            total += triangle_solid_angle(ico.vertices[f[0]], ico.vertices[f[1]], ico.vertices[f[2]]);
        }
        CHECK(total == doctest::Approx(4 * pi).epsilon(1e-12));
    }
}

TEST_SUITE("surface") {
    TEST_CASE("perturbation basis") {
        const Vec3 u{0.6, 0.0, 0.8};
        const double expect[] = {1.0, 0.6, 0.0, 0.8, 0.0, 0.0, 0.48, 0.36, 3 * 0.64 - 1};
        for (int i = 0; i < kPerturbationBasisSize; ++i) {
            CHECK(perturbation_basis(i, u) == doctest::Approx(expect[i]));
        }
        CHECK_THROWS_AS(perturbation_basis(9, u), SpecError);
        const RadialGraphSpec spec = graph(SpaceKind::Euclidean, 2.0, {{3, 0.1}, {8, -0.05}});
        CHECK(spec.radius_at(u) == doctest::Approx(2.0 * (1 + 0.08 - 0.05 * 0.92)));
    }

    TEST_CASE("sphere mesh structure") {
        const SurfaceMesh m = build_radial_graph(sphere_spec(SpaceKind::Euclidean, 1.0), 3);
        CHECK(m.vertices.size() == 642);
        CHECK(m.faces.size() == 1280);
        CHECK(euler_characteristic(m) == 2);
        CHECK(m.subdivision_level == 3);
        for (std::size_t i = 0; i < m.vertices.size(); ++i) {
            CHECK(coordinate_norm(m.normals[i] - m.vertices[i].x) < 1e-9);
        }

        const SurfaceMesh h = build_radial_graph(sphere_spec(SpaceKind::Hyperbolic, 1.0), 3);
        for (const Point& p : h.vertices) {
            CHECK(ambient_inner(SpaceKind::Hyperbolic, p.x, p.x) == doctest::Approx(-1.0).epsilon(1e-12));
            CHECK(p.x[0] == doctest::Approx(std::cosh(1.0)).epsilon(1e-13));
        }
    }

    TEST_CASE("normals are unit, tangent, outward and weights partition 4 pi") {
        oracle::Rng rng(21);
        for (SpaceKind s : {SpaceKind::Euclidean, SpaceKind::Hyperbolic, SpaceKind::Spherical}) {
            for (int trial = 0; trial < 4; ++trial) {
                RadialGraphSpec spec = graph(s, s == SpaceKind::Spherical ? 0.6 : 1.0,
                                             {{rng.integer(1, 8), rng.uniform(-0.1, 0.1)},
                                              {rng.integer(1, 8), rng.uniform(-0.1, 0.1)}});
                if (trial % 2 == 1) spec.center = oracle::random_point(s, 0.8, rng);
                if (s == SpaceKind::Euclidean && trial % 2 == 1) spec.center = {Vec4{{0.5, -1.0, 2.0, 0.0}}};
                const SurfaceMesh m = build_radial_graph(spec, 3);
                const double wsum = std::accumulate(m.solid_angle_weights.begin(), m.solid_angle_weights.end(), 0.0);
                CHECK(wsum == doctest::Approx(4 * pi).epsilon(1e-12));
                for (std::size_t i = 0; i < m.vertices.size(); ++i) {
                    const Vec4& n = m.normals[i];
                    CHECK(ambient_inner(s, n, n) == doctest::Approx(1.0).epsilon(1e-9));
                    if (s != SpaceKind::Euclidean) CHECK(std::abs(ambient_inner(s, n, m.vertices[i].x)) < 1e-9);
                    const Vec4 outward = -log_map(s, m.vertices[i], m.center).direction;
                    CHECK(ambient_inner(s, n, outward) > 0.0);
                    CHECK(m.radii[i] == doctest::Approx(spec.radius_at(m.directions[i])).epsilon(1e-10));
                }
            }
        }
    }

    TEST_CASE("spec errors") {
        CHECK_THROWS_AS(build_radial_graph(sphere_spec(SpaceKind::Euclidean, -1.0), 2), SpecError);
        CHECK_THROWS_AS(build_radial_graph(sphere_spec(SpaceKind::Spherical, 1.6), 2), SpecError);
        CHECK_THROWS_AS(build_radial_graph(graph(SpaceKind::Euclidean, 1.0, {{0, -1.5}}), 2), SpecError);
        CHECK_THROWS_AS(build_radial_graph(graph(SpaceKind::Spherical, 1.4, {{3, 0.2}}), 2), SpecError);
        CHECK_THROWS_AS(build_radial_graph(graph(SpaceKind::Euclidean, 1.0, {{12, 0.1}}), 2), SpecError);
    }

    TEST_CASE("sphere integrals match the independent oracle") {
        for (const auto& c : kSpheres) {
            const oracle::SphereData ref = oracle::sphere(curvature(c.space), c.r);
            const GeometricSummary s = summarize(build_radial_graph(sphere_spec(c.space, c.r), 5));
            CHECK(rel(s.area, ref.area) < 2e-3);
            CHECK(rel(s.total_mean_curvature, ref.mean) < 5e-3);
            CHECK(rel(s.volume, ref.volume) < 2e-3);
        }
        // unit Euclidean sphere: 0.1 % area and volume
        const GeometricSummary u = summarize(build_radial_graph(sphere_spec(SpaceKind::Euclidean, 1.0), 5));
        CHECK(rel(u.area, 4 * pi) < 1e-3);
        CHECK(rel(u.volume, 4 * pi / 3) < 1e-3);
        // hemisphere volume pi^2 (the mesh only needs radii, rho = pi/2 is allowed for volume)
        SurfaceMesh hemi = build_radial_graph(sphere_spec(SpaceKind::Spherical, 1.2), 4);
        std::fill(hemi.radii.begin(), hemi.radii.end(), pi / 2);
        CHECK(rel(enclosed_volume(hemi), pi * pi) < 2e-3);
    }

    TEST_CASE("refinement convergence on spheres") {
        for (const auto& c : kSpheres) {
            const oracle::SphereData ref = oracle::sphere(curvature(c.space), c.r);
            std::vector<GeometricSummary> runs;
            for (int n = 2; n <= 6; ++n) runs.push_back(summarize(build_radial_graph(sphere_spec(c.space, c.r), n)));
            for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
                CHECK(std::abs(runs[i + 1].area - ref.area) <= 0.3 * std::abs(runs[i].area - ref.area));
                CHECK(std::abs(runs[i + 1].total_mean_curvature - ref.mean) <=
                      0.3 * std::abs(runs[i].total_mean_curvature - ref.mean));
                // constant radius: the volume estimator is exact up to rounding
                CHECK(rel(runs[i].volume, ref.volume) < 1e-12);
            }
        }
    }

    TEST_CASE("total mean curvature step checks") {
        const SurfaceMesh m = build_radial_graph(sphere_spec(SpaceKind::Euclidean, 1.0), 2);
        CHECK_THROWS_AS(total_mean_curvature(m, 0.0), InputError);
        CHECK_THROWS_AS(total_mean_curvature(m, 2e-3), InputError);
        CHECK(total_mean_curvature(m, 1e-3) == doctest::Approx(total_mean_curvature(m)).epsilon(1e-8));
    }

    TEST_CASE("total mean curvature is invariant under relabeling") {
        for (const auto& c : kSpheres) {
            const SurfaceMesh m = build_radial_graph(sphere_spec(c.space, c.r), 4);
            std::vector<std::uint32_t> perm(m.vertices.size());
            std::iota(perm.begin(), perm.end(), 0u);
            std::reverse(perm.begin(), perm.end());
            std::rotate(perm.begin(), perm.begin() + 97, perm.end());
            SurfaceMesh p = m;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                p.vertices[perm[i]] = m.vertices[i];
                p.directions[perm[i]] = m.directions[i];
                p.radii[perm[i]] = m.radii[i];
                p.normals[perm[i]] = m.normals[i];
                p.solid_angle_weights[perm[i]] = m.solid_angle_weights[i];
            }
            for (std::size_t f = 0; f < m.faces.size(); ++f) {
                const Face& old = m.faces[f];
                p.faces[(f * 7) % m.faces.size()] = {perm[old[1]], perm[old[2]], perm[old[0]]};
            }
            CHECK(std::abs(total_mean_curvature(p) - total_mean_curvature(m)) < 1e-9);
        }
    }

    TEST_CASE("convexity report against the analytic oracle") {
        const ConvexityReport unit = convexity_report(build_radial_graph(sphere_spec(SpaceKind::Euclidean, 1.0), 4));
        CHECK(unit.is_plausibly_convex);
        CHECK(unit.min_principal_curvature_estimate == doctest::Approx(1.0).epsilon(0.02));
        CHECK(unit.tolerance == doctest::Approx(10.0 / 256));
        CHECK(unit.skipped_vertices == 0);

        const ConvexityReport hyp = convexity_report(build_radial_graph(sphere_spec(SpaceKind::Hyperbolic, 1.0), 4));
        CHECK(hyp.min_principal_curvature_estimate == doctest::Approx(1.0 / std::tanh(1.0)).epsilon(0.02));
        const ConvexityReport sph = convexity_report(build_radial_graph(sphere_spec(SpaceKind::Spherical, 0.5), 4));
        CHECK(sph.min_principal_curvature_estimate == doctest::Approx(1.0 / std::tan(0.5)).epsilon(0.02));

        const RadialGraphSpec mild = graph(SpaceKind::Euclidean, 1.0, {{8, 0.02}});
        CHECK(oracle::euclidean_graph_min_curvature(mild) > 0.0);
        CHECK(convexity_report(build_radial_graph(mild, 4)).is_plausibly_convex);

        const RadialGraphSpec wild = graph(SpaceKind::Euclidean, 1.0, {{8, 0.9}});
        CHECK(oracle::euclidean_graph_min_curvature(wild) < 0.0);
        CHECK_FALSE(convexity_report(build_radial_graph(wild, 4)).is_plausibly_convex);
    }

    TEST_CASE("convexity estimate tracks the oracle on random graphs") {
        oracle::Rng rng(33);
        for (int trial = 0; trial < 6; ++trial) {
            const RadialGraphSpec spec = graph(SpaceKind::Euclidean, 1.0,
                                               {{rng.integer(4, 8), rng.uniform(-0.3, 0.3)}});
            const double exact = oracle::euclidean_graph_min_curvature(spec, 80, 160);
            const ConvexityReport rep = convexity_report(build_radial_graph(spec, 5));
            CHECK(rep.min_principal_curvature_estimate == doctest::Approx(exact).epsilon(0.05).scale(1.0));
        }
    }
}
