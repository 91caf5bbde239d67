#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "minkflow/errors.hpp"
#include "minkflow/parallel.hpp"
#include "minkflow/space.hpp"
#include "oracles.hpp"

using namespace minkflow;
using oracle::pi;

namespace {

Point pt(double a, double b, double c, double d = 0.0) { return {Vec4{{a, b, c, d}}}; }

constexpr SpaceKind kAll[] = {SpaceKind::Euclidean, SpaceKind::Hyperbolic, SpaceKind::Spherical};

double window_limit(SpaceKind s) { return s == SpaceKind::Spherical ? pi / 2 - 1e-9 : 10.0; }

}  // namespace

TEST_SUITE("space") {
    TEST_CASE("ambient inner products") {
        const std::vector<double> x{1, 0, 0}, y{0, 1, 0};
        CHECK(ambient_inner(SpaceKind::Euclidean, x, y) == 0.0);
        const std::vector<double> e0{1, 0, 0, 0}, e3{0, 0, 0, 1};
        CHECK(ambient_inner(SpaceKind::Hyperbolic, e0, e0) == -1.0);
        CHECK(ambient_inner(SpaceKind::Spherical, e3, e3) == 1.0);
        CHECK_THROWS_AS(ambient_inner(SpaceKind::Euclidean, e0, e0), InputError);
        CHECK_THROWS_AS(ambient_inner(SpaceKind::Hyperbolic, x, x), InputError);
    }

    TEST_CASE("space metadata") {
        CHECK(curvature(SpaceKind::Hyperbolic) == -1);
        CHECK(ambient_dimension(SpaceKind::Euclidean) == 3);
        CHECK(ambient_dimension(SpaceKind::Spherical) == 4);
        CHECK(space_from_curvature(1) == SpaceKind::Spherical);
        CHECK_THROWS_AS(space_from_curvature(2), InputError);
        for (SpaceKind s : kAll) CHECK(parse_space(space_name(s)) == s);
        CHECK_THROWS_AS(parse_space("poincare"), InputError);
    }

    TEST_CASE("exp map on coordinate geodesics") {
        const Point e = exp_map(SpaceKind::Euclidean, {pt(0, 0, 0), Vec4{{1, 0, 0, 0}}}, 2.0);
        CHECK(e.x[0] == doctest::Approx(2.0));
        CHECK(e.x[1] == 0.0);

        const Point s = exp_map(SpaceKind::Spherical, {pt(1, 0, 0, 0), Vec4{{0, 1, 0, 0}}}, pi / 2);
        CHECK(std::abs(s.x[0]) < 1e-15);
        CHECK(s.x[1] == doctest::Approx(1.0).epsilon(1e-15));

        const Point h = exp_map(SpaceKind::Hyperbolic, {pt(1, 0, 0, 0), Vec4{{0, 1, 0, 0}}}, 1.0);
        CHECK(h.x[0] == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
        CHECK(h.x[1] == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
    }

    TEST_CASE("exp map rejects bad directions") {
        CHECK_THROWS_AS(exp_map(SpaceKind::Spherical, {pt(1, 0, 0, 0), Vec4{{0, 2, 0, 0}}}, 1.0), InputError);
        CHECK_THROWS_AS(exp_map(SpaceKind::Hyperbolic, {pt(1, 0, 0, 0), Vec4{{0.1, 1, 0, 0}}}, 1.0), InputError);
        CHECK_THROWS_AS(exp_map(SpaceKind::Euclidean, {pt(0, 0, 0), Vec4{{0, 0, 0.5, 0}}}, 1.0), InputError);
    }

    TEST_CASE("project to tangent") {
        const Vec4 w{{1, 1, 0, 0}};
        CHECK(project_to_tangent(SpaceKind::Euclidean, pt(3, 4, 5), Vec4{{1, 2, 3, 0}}) == Vec4{{1, 2, 3, 0}});
        CHECK(project_to_tangent(SpaceKind::Spherical, pt(1, 0, 0, 0), w) == Vec4{{0, 1, 0, 0}});
        CHECK(project_to_tangent(SpaceKind::Hyperbolic, pt(1, 0, 0, 0), w) == Vec4{{0, 1, 0, 0}});

        oracle::Rng rng(11);
        for (SpaceKind s : {SpaceKind::Hyperbolic, SpaceKind::Spherical}) {
            for (int i = 0; i < 200; ++i) {
                const Point p = oracle::random_point(s, 3.0, rng);
                const Vec4 v{{rng.normal(), rng.normal(), rng.normal(), rng.normal()}};
                const Vec4 t = project_to_tangent(s, p, v);
                const double scale = std::max(1.0, coordinate_norm(v) * coordinate_norm(p.x));
                CHECK(std::abs(ambient_inner(s, t, p.x)) <= 1e-12 * scale * scale);
            }
        }
    }

    TEST_CASE("radial volume primitive against quadrature") {
        CHECK(radial_volume_primitive(SpaceKind::Euclidean, 1.0) == doctest::Approx(1.0 / 3.0));
        CHECK(4 * pi * radial_volume_primitive(SpaceKind::Hyperbolic, 1.0) ==
              doctest::Approx(pi * std::sinh(2.0) - 2 * pi).epsilon(1e-14));
        CHECK(4 * pi * radial_volume_primitive(SpaceKind::Spherical, pi / 2) ==
              doctest::Approx(pi * pi).epsilon(1e-14));
        for (SpaceKind s : kAll) {
            CHECK(radial_volume_primitive(s, 0.0) == 0.0);
            double prev = 0.0;
            for (double rho : {1e-6, 1e-3, 5e-3, 0.0099, 0.0101, 0.05, 0.3, 1.0, 2.0, 3.0}) {
                const double f = radial_volume_primitive(s, rho);
                const double q = oracle::sn2_integral(curvature(s), rho);
                CHECK(f == doctest::Approx(q).epsilon(1e-13));
                CHECK(f > prev);
                prev = f;
            }
            CHECK_THROWS_AS(radial_volume_primitive(s, -0.1), InputError);
        }
        CHECK_THROWS_AS(radial_volume_primitive(SpaceKind::Spherical, pi), DomainError);
    }

    TEST_CASE("exp map preserves the model constraint") {
        // 1e6 random unit tangents per curved space, split across workers
        for (SpaceKind s : {SpaceKind::Hyperbolic, SpaceKind::Spherical}) {
            const std::size_t blocks = 64, per_block = 1'000'000 / blocks;
            std::vector<double> worst(blocks, 0.0);
            parallel_for(blocks, [&](std::size_t b) {
                oracle::Rng rng(1000 + b);
                for (std::size_t i = 0; i < per_block; ++i) {
                    const Point p = oracle::random_point(s, 2.0, rng);
                    const Vec4 dir = oracle::random_unit_tangent(s, p, rng);
                    const Point q = exp_map(s, {p, dir}, rng.uniform(0.0, window_limit(s)));
                    worst[b] = std::max(worst[b], constraint_residual(s, q));
                    if (s == SpaceKind::Hyperbolic && !(q.x[0] > 0)) worst[b] = 1.0;
                }
            });
            CHECK(*std::max_element(worst.begin(), worst.end()) < 1e-9);
        }
    }

    TEST_CASE("exp map semigroup along radial geodesics") {
        oracle::Rng rng(7);
        for (SpaceKind s : kAll) {
            for (int i = 0; i < 500; ++i) {
                const Point p = s == SpaceKind::Euclidean ? pt(rng.normal(), rng.normal(), rng.normal())
                                                          : oracle::random_point(s, 1.0, rng);
                const Vec4 dir = oracle::random_unit_tangent(s, p, rng);
                // hyperboloid coordinates lose about e^{2d} ulps at distance d
                const double lim = s == SpaceKind::Spherical ? pi / 4 : 2.0;
                const double a = rng.uniform(0.0, lim), b = rng.uniform(0.0, lim);
                const Point mid = exp_map(s, {p, dir}, a);
                // transported velocity: recombination of base and dir
                Vec4 vel = dir;
                if (s == SpaceKind::Spherical) vel = p.x * (-std::sin(a)) + dir * std::cos(a);
                if (s == SpaceKind::Hyperbolic) vel = p.x * std::sinh(a) + dir * std::cosh(a);
                const Point two = exp_map(s, {mid, vel}, b);
                const Point one = exp_map(s, {p, dir}, a + b);
                const double scale = std::max(1.0, coordinate_norm(one.x));
                CHECK(coordinate_norm(two.x - one.x) <= 1e-10 * scale);
                CHECK(coordinate_norm(geodesic_velocity(s, {p, dir}, a) - vel) <= 1e-12 * scale);
            }
        }
    }

    TEST_CASE("log map inverts exp map") {
        oracle::Rng rng(5);
        for (SpaceKind s : kAll) {
            for (int i = 0; i < 300; ++i) {
                const Point p = oracle::random_point(s, 1.0, rng);
                const Point p0 = s == SpaceKind::Euclidean ? pt(0.3, -0.2, 0.1) : p;
                const Vec4 dir = oracle::random_unit_tangent(s, p0, rng);
                const double d = rng.uniform(0.01, s == SpaceKind::Spherical ? 3.0 : 4.0);
                const Point q = exp_map(s, {p0, dir}, d);
                const GeodesicPolar lp = log_map(s, p0, q);
                CHECK(lp.distance == doctest::Approx(d).epsilon(1e-9));
                CHECK(coordinate_norm(lp.direction - dir) < 1e-8);
                CHECK(geodesic_distance(s, p0, q) == doctest::Approx(d).epsilon(1e-9));
            }
        }
    }

    TEST_CASE("tangent frame is orthonormal at the center") {
        oracle::Rng rng(9);
        for (SpaceKind s : kAll) {
            const Point c = s == SpaceKind::Euclidean ? pt(1, 2, 3) : oracle::random_point(s, 1.5, rng);
            const auto frame = tangent_frame(s, c);
            for (int i = 0; i < 3; ++i) {
                if (s != SpaceKind::Euclidean) CHECK(std::abs(ambient_inner(s, frame[i], c.x)) < 1e-12);
                for (int j = 0; j < 3; ++j) {
                    CHECK(ambient_inner(s, frame[i], frame[j]) == doctest::Approx(i == j ? 1.0 : 0.0));
                }
            }
        }
    }

    TEST_CASE("make_point validates constraints") {
        const std::vector<double> good{std::cosh(0.5), std::sinh(0.5), 0, 0};
        CHECK(constraint_residual(SpaceKind::Hyperbolic, make_point(SpaceKind::Hyperbolic, good)) < 1e-12);
        const std::vector<double> lower{-1, 0, 0, 0};
        CHECK_THROWS_AS(make_point(SpaceKind::Hyperbolic, lower), InputError);
        const std::vector<double> off{1.1, 0, 0, 0};
        CHECK_THROWS_AS(make_point(SpaceKind::Spherical, off), InputError);
    }
}

TEST_SUITE("parallel") {
    TEST_CASE("parallel_for visits every index once") {
        std::vector<int> hits(100'003, 0);
        parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        CHECK(worker_count() >= 1);
    }

    TEST_CASE("parallel_for propagates exceptions") {
        CHECK_THROWS_AS(parallel_for(10'000, [](std::size_t i) {
                            if (i == 7777) throw NumericError("boom");
                        }),
                        NumericError);
    }

    TEST_CASE("pairwise sum") {
        std::vector<double> v(1 << 16, 0.1);
        CHECK(pairwise_sum(v) == doctest::Approx(6553.6).epsilon(1e-14));
        CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
    }
}
