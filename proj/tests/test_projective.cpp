#include <doctest.h>

#include <cmath>
#include <random>

#include "horopack/horoball.hpp"
#include "horopack/projective.hpp"
#include "oracle_helpers.hpp"

using namespace horo;

namespace {

std::mt19937_64 rng(20240815);

double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

ProjectivePoint random_interior(double rmax = 0.9) {
    while (true) {
        const double x = uniform(-rmax, rmax), y = uniform(-rmax, rmax),
                     z = uniform(-rmax, rmax);
        if (x * x + y * y + z * z < rmax * rmax)
            return ProjectivePoint(1.0, x, y, z);
    }
}

} // namespace

TEST_CASE("lorentz product on basic points") {
    CHECK(lorentz_product(ProjectivePoint(1, 0, 0, 1), ProjectivePoint(1, 0, 0, 1)) == 0.0);
    CHECK(lorentz_product(ProjectivePoint(1, 0, 0, 0), ProjectivePoint(1, 0, 0, 0)) == -1.0);
    CHECK(lorentz_product(ProjectivePoint(1, 0, 0, 0), ProjectivePoint(1, 0, 0, 1)) == -1.0);
}

TEST_CASE("lorentz product is bilinear and symmetric") {
    for (int k = 0; k < 200; ++k) {
        Vec4 a{{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)}};
        Vec4 b{{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)}};
        Vec4 c{{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)}};
        const double lam = uniform(-3, 3);
        CHECK(lorentz_product(a, b) == doctest::Approx(lorentz_product(b, a)).epsilon(1e-15));
        CHECK(lorentz_product(a + lam * b, c) ==
              doctest::Approx(lorentz_product(a, c) + lam * lorentz_product(b, c))
                  .epsilon(1e-12));
    }
}

TEST_CASE("classification of model points") {
    CHECK(classify(ProjectivePoint(1, 0, 0, 0)) == PointClass::Interior);
    CHECK(classify(ProjectivePoint(1, std::sqrt(3.0) / 2.0, 0, -0.5)) == PointClass::Ideal);
    CHECK(classify(ProjectivePoint(1, 2, 0, 0)) == PointClass::Exterior);
    CHECK_THROWS_AS(classify(ProjectivePoint(0, 0, 0, 0)), InvalidInput);
}

TEST_CASE("classification and distance are scale invariant") {
    for (int k = 0; k < 100; ++k) {
        const ProjectivePoint p = random_interior();
        const ProjectivePoint q = random_interior();
        const double lam = uniform(0.1, 10.0) * (k % 2 ? -1.0 : 1.0);
        CHECK(classify(ProjectivePoint(lam * p.x)) == classify(p));
        const double d0 = hyperbolic_distance(p, q);
        const double d1 =
            hyperbolic_distance(ProjectivePoint(lam * p.x), ProjectivePoint(uniform(0.1, 3.0) * q.x));
        CHECK(d1 == doctest::Approx(d0).epsilon(1e-12));
    }
}

TEST_CASE("distance examples and symmetry") {
    const ProjectivePoint o(1, 0, 0, 0);
    CHECK(hyperbolic_distance(o, o) == 0.0);

    // Radial point at Euclidean radius 1/2; cross-checked by quadrature of
    // the radial line element.
    const double d = hyperbolic_distance(o, ProjectivePoint(1, 0, 0, 0.5));
    CHECK(d == doctest::Approx(std::acosh(2.0 / std::sqrt(3.0))).epsilon(1e-14));
    CHECK(d == doctest::Approx(testoracle::klein_radial_distance(0.5)).epsilon(1e-12));

    for (int k = 0; k < 100; ++k) {
        const ProjectivePoint p = random_interior(), q = random_interior();
        CHECK(hyperbolic_distance(p, q) ==
              doctest::Approx(hyperbolic_distance(q, p)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(hyperbolic_distance(o, ProjectivePoint(1, 0, 0, 1)), DomainError);
}

TEST_CASE("triangle inequality for random interior triples") {
    for (int k = 0; k < 200; ++k) {
        const ProjectivePoint a = random_interior(), b = random_interior(),
                              c = random_interior();
        const double ab = hyperbolic_distance(a, b);
        const double bc = hyperbolic_distance(b, c);
        const double ac = hyperbolic_distance(a, c);
        CHECK(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("polar planes") {
    // Center of the model: polar is the ideal hyperplane x0 = 0.
    const PlaneCovector u = polar_plane(ProjectivePoint(1, 0, 0, 0));
    CHECK(u.value(ProjectivePoint(0, 1, 0, 0)) == 0.0);
    CHECK(u.value(ProjectivePoint(0, 0, 2, -1)) == 0.0);
    CHECK(u.value(ProjectivePoint(1, 0, 0, 0)) != 0.0);

    // An ideal point is incident with its own polar.
    const ProjectivePoint ideal(1, 0, 0, 1);
    CHECK(polar_plane(ideal).value(ideal) == doctest::Approx(0.0).epsilon(1e-15));

    // Polar of an interior point misses the closed ball: every incident
    // point is exterior.
    const PlaneCovector v = polar_plane(ProjectivePoint(1, 0, 0, 0.5));
    for (int k = 0; k < 50; ++k) {
        // v = (-1, 0, 0, 1/2): incident points (1, a, b, 2).
        const ProjectivePoint y(1, uniform(-5, 5), uniform(-5, 5), 2);
        CHECK(v.value(y) == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(lorentz_product(y, y) > 0.0);
    }
}

TEST_CASE("foot of perpendicular") {
    const PlaneCovector z0(0, 0, 0, 1); // plane {x3 = 0}
    const ProjectivePoint x(1, 0, 0, 0.5);
    const ProjectivePoint foot = normalized(foot_of_perpendicular(x, z0));
    CHECK(foot[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(foot[3] == doctest::Approx(0.0).epsilon(1e-15));

    // A point already on the plane is its own foot.
    const ProjectivePoint on(1, 0.3, -0.2, 0);
    const ProjectivePoint foot2 = normalized(foot_of_perpendicular(on, z0));
    for (int i = 0; i < 4; ++i)
        CHECK(foot2[i] == doctest::Approx(on[i]).epsilon(1e-14));

    // Foot dropped from the ideal vertex (1,0,0,1) onto the plane through
    // the other three vertices of the regular (z = 0) tetrahedron.
    const double h = std::sqrt(3.0) / 2.0;
    const PlaneCovector f = plane_from_points(ProjectivePoint(1, 0, 1, 0),
                                              ProjectivePoint(1, h, 0, -0.5),
                                              ProjectivePoint(1, -h, 0, -0.5));
    const ProjectivePoint e3(1, 0, 0, 1);
    const ProjectivePoint ft = normalized(foot_of_perpendicular(e3, f));
    CHECK(ft[1] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ft[2] == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
    CHECK(ft[3] == doctest::Approx(-2.0 / 7.0).epsilon(1e-14));
    CHECK(std::abs(f.value(ft)) < 1e-12);

    // Residual invariants on random inputs: incidence, collinearity with the
    // pole (= perpendicularity), and distance minimality over the plane.
    for (int k = 0; k < 100; ++k) {
        const ProjectivePoint p = random_interior();
        const ProjectivePoint a = random_interior(0.8), b = random_interior(0.8),
                              c = random_interior(0.8);
        PlaneCovector u;
        try {
            u = plane_from_points(a, b, c);
        } catch (const DegenerateInput&) {
            continue;
        }
        ProjectivePoint y;
        try {
            y = normalized(foot_of_perpendicular(p, u));
        } catch (const DomainError&) {
            continue; // plane missing the interior
        }
        double scale = 0.0;
        for (int i = 0; i < 4; ++i)
            scale = std::max(scale, std::abs(u.u[i]));
        CHECK(std::abs(u.value(y)) / scale < 1e-10);

        // p, y, pole(u) collinear: all 3x3 minors of the stacked matrix die.
        const ProjectivePoint pn = normalized(p);
        ProjectivePoint pol = pole(u);
        double pscale = 0.0;
        for (int i = 0; i < 4; ++i)
            pscale = std::max(pscale, std::abs(pol[i]));
        pol = ProjectivePoint((1.0 / pscale) * pol.x);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int l = j + 1; l < 4; ++l) {
                    const double det =
                        pn[i] * (y[j] * pol[l] - y[l] * pol[j]) -
                        pn[j] * (y[i] * pol[l] - y[l] * pol[i]) +
                        pn[l] * (y[i] * pol[j] - y[j] * pol[i]);
                    CHECK(std::abs(det) < 1e-9);
                }

        // The foot minimizes the distance to the plane when it is interior.
        if (classify(y) != PointClass::Interior)
            continue;
        const double dy = hyperbolic_distance(pn, y);
        for (int m = 0; m < 8; ++m) {
            Vec4 dir{{0, uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)}};
            // Project the perturbation into the plane through y.
            const double du = u.u[1] * dir[1] + u.u[2] * dir[2] + u.u[3] * dir[3];
            const double uy_norm =
                u.u[1] * u.u[1] + u.u[2] * u.u[2] + u.u[3] * u.u[3];
            ProjectivePoint q(y.x + 0.02 * (dir - (du / uy_norm) * Vec4{{0, u.u[1], u.u[2],
                                                                         u.u[3]}}));
            // Re-project exactly onto the plane through the covector.
            const double corr = u.value(q) / uy_norm;
            q = ProjectivePoint(
                q.x - corr * Vec4{{0, u.u[1], u.u[2], u.u[3]}});
            if (std::abs(u.value(q)) / scale > 1e-9 ||
                classify(q) != PointClass::Interior)
                continue;
            CHECK(hyperbolic_distance(pn, q) >= dy - 1e-12);
        }
    }
}

TEST_CASE("plane through three points") {
    const PlaneCovector u = plane_from_points(ProjectivePoint(1, 0, 0, 0),
                                              ProjectivePoint(1, 1, 0, 0),
                                              ProjectivePoint(1, 0, 1, 0));
    // The plane {x3 = 0}: covector proportional to (0,0,0,1).
    CHECK(std::abs(u.u[0]) < 1e-15);
    CHECK(std::abs(u.u[1]) < 1e-15);
    CHECK(std::abs(u.u[2]) < 1e-15);
    CHECK(std::abs(u.u[3]) > 0.1);

    const double h = std::sqrt(3.0) / 2.0;
    const ProjectivePoint e1(1, h, 0, -0.5), e2(1, -h, 0, -0.5), e3(1, 0, 0, 1);
    const PlaneCovector v = plane_from_points(e1, e2, e3);
    double scale = 0.0;
    for (int i = 0; i < 4; ++i)
        scale = std::max(scale, std::abs(v.u[i]));
    for (const ProjectivePoint* p : {&e1, &e2, &e3})
        CHECK(std::abs(v.value(*p)) / scale < 1e-12);

    // Permutations agree up to scale.
    const PlaneCovector w = plane_from_points(e3, e1, e2);
    int imax = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(v.u[i]) > std::abs(v.u[imax]))
            imax = i;
    const double lam = w.u[imax] / v.u[imax];
    for (int i = 0; i < 4; ++i)
        CHECK(w.u[i] == doctest::Approx(lam * v.u[i]).epsilon(1e-12));

    CHECK_THROWS_AS(plane_from_points(e1, e1, e2), DegenerateInput);
    CHECK_THROWS_AS(plane_from_points(ProjectivePoint(1, 0, 0, 0), ProjectivePoint(2, 0, 0, 0),
                                      ProjectivePoint(1, 1, 1, 1)),
                    DegenerateInput);
}

TEST_CASE("segment against quadrics") {
    const Quadric abs_q = Quadric::absolute();

    // Center to an ideal point: tangency at the ideal endpoint.
    const auto roots =
        segment_quadric_intersection(ProjectivePoint(1, 0, 0, 0), ProjectivePoint(1, 0, 0, 1),
                                     abs_q);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].t == doctest::Approx(1.0).epsilon(1e-12));

    // Strictly interior segment against a horoball surface that misses it.
    const Quadric ball = canonical_horosphere_quadric(0.9);
    CHECK(segment_quadric_intersection(ProjectivePoint(1, 0.1, 0, -0.5),
                                       ProjectivePoint(1, -0.2, 0.1, -0.4), ball)
              .empty());

    CHECK_THROWS_AS(segment_quadric_intersection(ProjectivePoint(1, 0.1, 0, 0),
                                                 ProjectivePoint(2, 0.2, 0, 0), abs_q),
                    DegenerateInput);

    // Root residuals on random horoball quadrics.
    for (int k = 0; k < 100; ++k) {
        const Quadric q = canonical_horosphere_quadric(uniform(-0.8, 0.8));
        const ProjectivePoint a = random_interior(0.95), b = random_interior(0.95);
        std::vector<QuadricRoot> rs;
        try {
            rs = segment_quadric_intersection(a, b, q);
        } catch (const DegenerateInput&) {
            continue;
        }
        for (const QuadricRoot& r : rs) {
            const ProjectivePoint p = affine_lerp(a, b, r.t);
            CHECK(std::abs(q.eval(p)) / q.max_abs() < 1e-10);
        }
    }
}
