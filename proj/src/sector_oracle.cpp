#include "horopack/sector_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace horo {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double to_unit(std::uint64_t bits) { return (bits >> 11) * 0x1.0p-53; }

// Fibonacci rank-1 lattice rungs (N, generator).
struct LatticeRung {
    long n;
    long g;
};
constexpr LatticeRung kRungs[] = {{196418, 121393},
                                  {514229, 317811},
                                  {1346269, 832040},
                                  {3524578, 2178309},
                                  {9227465, 5702887}};

// Mean of the kernel over one shifted lattice.
double lattice_mean(const kernels::ColumnBatch& batch, kernels::ColumnKernelFn kernel,
                    long n, long g, double shift1, double shift2) {
    constexpr std::size_t kChunk = 4096;
    std::vector<double> u1(kChunk), u2(kChunk), out(kChunk);

    double acc = 0.0;
    long k = 0; // i * g mod n, tracked incrementally and exactly
    std::size_t fill = 0;
    const double inv_n = 1.0 / static_cast<double>(n);
    auto flush = [&]() {
        kernel(batch, u1.data(), u2.data(), out.data(), fill);
        double part = 0.0;
        for (std::size_t j = 0; j < fill; ++j)
            part += out[j];
        acc += part;
        fill = 0;
    };
    for (long i = 0; i < n; ++i) {
        double a = static_cast<double>(i) * inv_n + shift1;
        a -= std::floor(a);
        double b = static_cast<double>(k) * inv_n + shift2;
        b -= std::floor(b);
        u1[fill] = a;
        u2[fill] = b;
        if (++fill == kChunk)
            flush();
        k += g;
        if (k >= n)
            k -= n;
    }
    if (fill > 0)
        flush();
    return acc * inv_n;
}

OracleResult integrate_batch(const kernels::ColumnBatch& batch, const OracleOptions& opts) {
    const kernels::ColumnKernelFn kernel = kernels::select_column_kernel(opts.kernel);

    std::uint64_t state = opts.seed;
    std::vector<std::pair<double, double>> shifts;
    auto ensure_shifts = [&](int m) {
        while (static_cast<int>(shifts.size()) < m) {
            const double s1 = to_unit(splitmix64(state));
            const double s2 = to_unit(splitmix64(state));
            shifts.emplace_back(s1, s2);
        }
    };

    // Rung ladder with the base shift count, then shift escalation on the
    // largest rung for slow-converging sliver regions.
    const int base = std::max(2, opts.shifts);
    struct Stage {
        LatticeRung rung;
        int m;
    };
    std::vector<Stage> stages;
    for (const LatticeRung& rung : kRungs)
        stages.push_back({rung, base});
    stages.push_back({kRungs[std::size(kRungs) - 1], 2 * base});
    stages.push_back({kRungs[std::size(kRungs) - 1], 4 * base});

    OracleResult res;
    std::vector<double> means;
    long means_rung = 0;
    for (const Stage& stage : stages) {
        if (stage.rung.n > opts.max_points_per_shift && res.points > 0)
            break;
        if (stage.rung.n != means_rung) {
            means.clear();
            means_rung = stage.rung.n;
        }
        ensure_shifts(stage.m);
        for (int i = static_cast<int>(means.size()); i < stage.m; ++i)
            means.push_back(lattice_mean(batch, kernel, stage.rung.n, stage.rung.g,
                                         shifts[i].first, shifts[i].second));
        double mean = 0.0;
        for (double m : means)
            mean += m;
        mean /= means.size();
        double var = 0.0;
        for (double m : means)
            var += (m - mean) * (m - mean);
        var /= means.size() * (means.size() - 1.0);

        res.volume = mean;
        res.error_estimate = std::sqrt(var);
        res.points = stage.rung.n;
        res.converged = res.error_estimate <= opts.rel_tol * std::abs(mean);
        if (res.converged)
            return res;
    }
    if (!res.converged)
        throw OracleNonConvergence(res, "oracle integration did not reach the error target");
    return res;
}

} // namespace

OracleResult oracle_sector_volume(const Horoball& h,
                                  const std::array<ProjectivePoint, 3>& edge_ends,
                                  const OracleOptions& opts) {
    // Assemble the clipped canonical-frame region: rotate the trihedron's
    // three face planes (apex + two edge directions, oriented toward the
    // remaining edge) into the frame where the ball is canonical.
    const Transform4 t = transport_to_center(h.center);
    kernels::ColumnBatch batch;
    batch.s = h.s;
    batch.nplanes = 3;
    for (int k = 0; k < 3; ++k) {
        const ProjectivePoint& p = edge_ends[(k + 1) % 3];
        const ProjectivePoint& q = edge_ends[(k + 2) % 3];
        PlaneCovector u = plane_from_points(h.center, p, q);
        if (u.value(edge_ends[k]) < 0.0)
            u = PlaneCovector(-u.u[0], -u.u[1], -u.u[2], -u.u[3]);
        PlaneCovector uc = t.apply_to_covector(u);
        const double scale = std::max({std::abs(uc.u[0]), std::abs(uc.u[1]), std::abs(uc.u[2]),
                                       std::abs(uc.u[3])});
        if (scale == 0.0)
            throw DegenerateInput("oracle_sector_volume: degenerate trihedron face");
        // Snap a near-vertical face to exactly vertical so the kernel treats
        // it as a pure feasibility test.
        double u3 = uc.u[3] / scale;
        if (std::abs(u3) < 1e-13)
            u3 = 0.0;
        batch.planes[k] = {uc.u[0] / scale, uc.u[1] / scale, uc.u[2] / scale, u3};
    }
    return integrate_batch(batch, opts);
}

OracleResult oracle_sector_volume(const SymmetricTetrahedron& tetra, int vertex, double s,
                                  const OracleOptions& opts) {
    const Horoball h(tetra.vertex[vertex], s);
    if (plane_margin(h, tetra.face[vertex]) < -kPackingSlack)
        throw PackingViolation("face(" + std::to_string(vertex) + ")",
                               plane_margin(h, tetra.face[vertex]),
                               "oracle_sector_volume: ball crosses its opposite face");
    const auto o = tetra.others(vertex);
    return oracle_sector_volume(
        h, {tetra.vertex[o[0]], tetra.vertex[o[1]], tetra.vertex[o[2]]}, opts);
}

OracleResult oracle_metric_ball_volume(double radius, long points, std::uint64_t seed) {
    if (!(radius > 0.0 && radius < 5.0))
        throw DomainError("oracle_metric_ball_volume: radius out of range");
    const double re = std::tanh(radius); // Euclidean radius in the model
    std::uint64_t state = seed;
    double acc = 0.0;
    for (long i = 0; i < points; ++i) {
        const double x = (2.0 * to_unit(splitmix64(state)) - 1.0) * re;
        const double y = (2.0 * to_unit(splitmix64(state)) - 1.0) * re;
        const double z = (2.0 * to_unit(splitmix64(state)) - 1.0) * re;
        const double r2 = x * x + y * y + z * z;
        if (r2 <= re * re) {
            const double d = 1.0 - r2;
            acc += 1.0 / (d * d);
        }
    }
    OracleResult res;
    const double box = 8.0 * re * re * re;
    res.volume = box * acc / points;
    res.points = points;
    // Plain MC: 1/sqrt(N) scale, reported as a rough estimate.
    res.error_estimate = res.volume / std::sqrt(static_cast<double>(points));
    res.converged = true;
    return res;
}

} // namespace horo
