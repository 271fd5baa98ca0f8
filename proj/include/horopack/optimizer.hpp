#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horopack/arrangement.hpp"

namespace horo {

struct CurveSample {
    double z = 0.0;
    double alpha = 0.0;
    double tet_volume = 0.0;
    double sector_sum = 0.0;
    double density = 0.0;
};

/// Density curve of one scenario over a z-grid. Infeasible grid points are
/// recorded as gaps, never interpolated.
struct DensityCurve {
    ScenarioId scenario_id{};
    std::vector<CurveSample> samples;
    std::vector<double> gaps; // grid points that failed to solve
    double z_lo = 0.0, z_hi = 0.0;
    int requested = 0;

    const CurveSample& max_sample() const;
};

DensityCurve scan(ScenarioId id, double z_lo, double z_hi, int n);

struct OptimumResult {
    ScenarioId scenario_id{};
    double z_star = 0.0;
    double delta_star = 0.0;
    double alpha_star = 0.0;
    bool endpoint_max = false;      // maximum attained at a feasibility boundary
    Interval interval{};            // feasibility interval that was searched
};

/// Golden-section maximization of the scenario density over [z_lo, z_hi],
/// refined to |z error| <= tol, with explicit endpoint evaluation; the
/// endpoint candidates are taken a hair inside the located boundaries.
OptimumResult maximize(ScenarioId id, double z_lo, double z_hi, double tol = 1e-10);

/// As above over the scenario's own feasibility interval.
OptimumResult maximize(ScenarioId id, double tol = 1e-10);

/// z3 boundary constant in closed form:
/// (4/73) sqrt(3) sqrt(178) cos(arctan((73/8001) sqrt(3) sqrt(229)) / 3) - 26/73.
double z3_closed_form();

/// Exact upper endpoint of the S1/S2 range, (-2 + 6 sqrt(3)) / 13.
double s1_boundary_closed_form();

/// Maximizes over every scenario (both z-sign families) and returns the
/// overall optimum; also exposes the per-scenario results.
struct GlobalSearchResult {
    OptimumResult best;
    std::vector<OptimumResult> per_scenario;
};
GlobalSearchResult global_search(double tol = 1e-10);

} // namespace horo
