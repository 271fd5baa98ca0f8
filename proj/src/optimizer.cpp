#include "horopack/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "horopack/volumes.hpp"

namespace horo {

const CurveSample& DensityCurve::max_sample() const {
    if (samples.empty())
        throw DomainError("DensityCurve: no feasible samples");
    return *std::max_element(samples.begin(), samples.end(),
                             [](const CurveSample& a, const CurveSample& b) {
                                 return a.density < b.density;
                             });
}

DensityCurve scan(ScenarioId id, double z_lo, double z_hi, int n) {
    if (n < 2)
        throw InvalidInput("scan: need at least two samples");
    if (!(z_lo < z_hi))
        throw InvalidInput("scan: z_lo must be below z_hi");
    DensityCurve curve;
    curve.scenario_id = id;
    curve.z_lo = z_lo;
    curve.z_hi = z_hi;
    curve.requested = n;
    for (int k = 0; k < n; ++k) {
        const double z = z_lo + (z_hi - z_lo) * k / (n - 1);
        try {
            const Arrangement arr = solve_scenario(id, z);
            curve.samples.push_back(
                {z, arr.tetra.alpha, arr.tetra.volume, arr.sector_sum, arr.density});
        } catch (const InfeasibleScenario&) {
            curve.gaps.push_back(z);
        } catch (const PackingViolation&) {
            curve.gaps.push_back(z);
        } catch (const DomainError&) {
            curve.gaps.push_back(z);
        }
    }
    if (curve.samples.empty())
        throw InfeasibleScenario("scan", "no feasible sample in the requested interval");
    return curve;
}

namespace {

double density_at(ScenarioId id, double z) { return solve_scenario(id, z).density; }

} // namespace

OptimumResult maximize(ScenarioId id, double z_lo, double z_hi, double tol) {
    if (!(z_lo < z_hi))
        throw InvalidInput("maximize: empty interval");
    tol = std::max(tol, 1e-13);

    // Golden-section search for an interior maximum.
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = z_lo, b = z_hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = density_at(id, c);
    double fd = density_at(id, d);
    while (b - a > tol) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = density_at(id, d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = density_at(id, c);
        }
    }
    const double z_int = fc > fd ? c : d;
    const double f_int = std::max(fc, fd);

    OptimumResult res;
    res.scenario_id = id;
    res.interval = {z_lo, z_hi};
    res.z_star = z_int;
    res.delta_star = f_int;
    res.endpoint_max = false;

    // Endpoint candidates; optima of these densities often sit exactly on
    // configuration-change boundaries, which golden section cannot pin.
    for (double ze : {z_lo, z_hi}) {
        try {
            const double fe = density_at(id, ze);
            if (fe >= res.delta_star) {
                res.delta_star = fe;
                res.z_star = ze;
                res.endpoint_max = true;
            }
        } catch (const std::exception&) {
            // boundary itself infeasible at this resolution; skip
        }
    }
    res.alpha_star = alpha_from_z(res.z_star);
    return res;
}

OptimumResult maximize(ScenarioId id, double tol) {
    const Interval iv = scenario_interval(id);
    OptimumResult res = maximize(id, iv.lo, iv.hi, tol);
    res.interval = iv;
    return res;
}

double z3_closed_form() {
    const double s3 = std::sqrt(3.0);
    return (4.0 / 73.0) * s3 * std::sqrt(178.0) *
               std::cos(std::atan((73.0 / 8001.0) * s3 * std::sqrt(229.0)) / 3.0) -
           26.0 / 73.0;
}

double s1_boundary_closed_form() { return (-2.0 + 6.0 * std::sqrt(3.0)) / 13.0; }

GlobalSearchResult global_search(double tol) {
    GlobalSearchResult out;
    bool have_best = false;
    for (ScenarioId id : all_scenarios()) {
        OptimumResult res;
        try {
            res = maximize(id, tol);
        } catch (const InfeasibleScenario&) {
            continue;
        }
        out.per_scenario.push_back(res);
        if (!have_best || res.delta_star > out.best.delta_star) {
            out.best = res;
            have_best = true;
        }
    }
    if (!have_best)
        throw DomainError("global_search: no feasible scenario");
    return out;
}

} // namespace horo
