#include <doctest.h>

#include <cmath>

#include "horopack/optimizer.hpp"
#include "horopack/volumes.hpp"

using namespace horo;

TEST_CASE("closed-form constants") {
    CHECK(z3_closed_form() == doctest::Approx(0.9061774494).epsilon(1e-9));
    CHECK(alpha_from_z(z3_closed_form()) == doctest::Approx(1.44340117).epsilon(1e-7));
    CHECK(s1_boundary_closed_form() == doctest::Approx(0.64556191).epsilon(1e-8));
}

TEST_CASE("S1 scan rises toward the right endpoint and starts near the regular density") {
    // The curve leaves the regular density with slope about -0.43, dips to
    // ~0.7717 near z = 0.363 and climbs to the endpoint maximum.
    const DensityCurve c = scan(ScenarioId::S1, 2e-4, s1_boundary_closed_form(), 100);
    CHECK(c.gaps.empty());
    CHECK(c.samples.size() == 100);
    CHECK(std::abs(c.samples.front().density - 0.85327609) < 2e-4);
    CHECK(c.max_sample().z == c.samples.back().z);
    CHECK(c.samples.back().density == doctest::Approx(0.86767481).epsilon(1e-6));
    // Strictly increasing tail.
    for (std::size_t k = (c.samples.size() * 4) / 5; k + 1 < c.samples.size(); ++k)
        CHECK(c.samples[k + 1].density > c.samples[k].density);
    // Convexity: second differences of a uniform 200-point scan keep a sign.
    const DensityCurve c2 = scan(ScenarioId::S1, 0.001, s1_boundary_closed_form(), 200);
    for (std::size_t k = 1; k + 1 < c2.samples.size(); ++k) {
        const double dd = c2.samples[k + 1].density - 2.0 * c2.samples[k].density +
                          c2.samples[k - 1].density;
        CHECK(dd > -1e-11);
    }
}

TEST_CASE("S4 scan strictly decreases") {
    const DensityCurve c = scan(ScenarioId::S4, 0.9061775, 0.999, 64);
    CHECK(c.gaps.empty());
    for (std::size_t k = 1; k < c.samples.size(); ++k)
        CHECK(c.samples[k].density < c.samples[k - 1].density);
    CHECK(c.samples.front().density < 0.87499429);
}

TEST_CASE("scan input validation and gap reporting") {
    CHECK_THROWS_AS(scan(ScenarioId::S1, 0.5, 0.4, 10), InvalidInput);
    CHECK_THROWS_AS(scan(ScenarioId::S1, 0.1, 0.2, 1), InvalidInput);
    // A range extending past the boundary yields gaps, never interpolation.
    const DensityCurve c = scan(ScenarioId::S1, 0.6, 0.7, 21);
    CHECK(!c.gaps.empty());
    CHECK(!c.samples.empty());
    CHECK(c.samples.size() + c.gaps.size() == 21);
    // Entirely infeasible range errors out.
    CHECK_THROWS_AS(scan(ScenarioId::S1, 0.8, 0.9, 5), InfeasibleScenario);
}

TEST_CASE("per-scenario maxima") {
    const OptimumResult s1 = maximize(ScenarioId::S1);
    CHECK(s1.endpoint_max);
    CHECK(s1.z_star == doctest::Approx(s1_boundary_closed_form()).epsilon(1e-7));
    CHECK(s1.delta_star == doctest::Approx(0.86767481).epsilon(1e-6));
    CHECK(s1.alpha_star == doctest::Approx(1.30899694).epsilon(1e-6));

    const OptimumResult s3 = maximize(ScenarioId::S3);
    CHECK(s3.endpoint_max);
    CHECK(s3.z_star == doctest::Approx(0.9061774494).epsilon(1e-6));
    CHECK(s3.delta_star == doctest::Approx(0.87499429).epsilon(1e-6));

    const OptimumResult s4 = maximize(ScenarioId::S4);
    CHECK(s4.endpoint_max);
    CHECK(s4.z_star == doctest::Approx(s4.interval.lo).epsilon(1e-9));
    CHECK(s4.delta_star < 0.87499429 + 1e-7);

    // The maximum dominates every scan sample.
    const DensityCurve c = scan(ScenarioId::S1, 0.01, s1.interval.hi, 60);
    for (const CurveSample& s : c.samples)
        CHECK(s1.delta_star >= s.density - 1e-9);
}

TEST_CASE("maximize is deterministic") {
    const OptimumResult a = maximize(ScenarioId::S3);
    const OptimumResult b = maximize(ScenarioId::S3);
    CHECK(a.z_star == b.z_star);
    CHECK(a.delta_star == b.delta_star);
}

TEST_CASE("global search lands on S3 at the optimum") {
    const GlobalSearchResult g = global_search();
    CHECK(g.best.scenario_id == ScenarioId::S3);
    CHECK(g.best.z_star == doctest::Approx(0.9061774494).epsilon(1e-6));
    CHECK(g.best.delta_star == doctest::Approx(0.87499429).epsilon(1e-6));
    CHECK(g.best.alpha_star == doctest::Approx(1.44340117).epsilon(1e-6));
    CHECK(g.best.delta_star > 0.85327609);

    bool any_mirrored = false;
    for (const OptimumResult& r : g.per_scenario) {
        CHECK(r.delta_star > 0.0);
        CHECK(r.delta_star < 1.0);
        CHECK(r.delta_star <= g.best.delta_star + 1e-12);
        for (ScenarioId m : mirrored_scenarios())
            if (r.scenario_id == m) {
                any_mirrored = true;
                CHECK(r.delta_star < 0.87499429);
            }
    }
    CHECK(any_mirrored);
}
