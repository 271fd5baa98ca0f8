#pragma once

#include <cstdint>

#include "horopack/arrangement.hpp"
#include "horopack/kernels/column_kernel.hpp"

namespace horo {

struct OracleOptions {
    double rel_tol = 1e-6;
    std::uint64_t seed = 0x9E3779B97F4A7C15ull;
    int shifts = 8;
    long max_points_per_shift = 9227465; // largest lattice rung
    kernels::KernelKind kernel = kernels::KernelKind::Auto;
};

struct OracleResult {
    double volume = 0.0;
    double error_estimate = 0.0; // standard error over the random shifts
    long points = 0;             // lattice points per shift at convergence
    bool converged = false;
};

/// Non-convergence within the point budget; carries the achieved estimate.
class OracleNonConvergence : public DomainError {
public:
    OracleNonConvergence(const OracleResult& partial, const std::string& what)
        : DomainError(what), partial_(partial) {}
    const OracleResult& partial() const { return partial_; }

private:
    OracleResult partial_;
};

/// Volume of (horoball of size s at tetra vertex i) intersected with the
/// trihedral cone at that vertex, by randomly-shifted rank-1 lattice
/// integration of the ball-model volume density over apex-centred polar
/// columns. Independent of the intrinsic-area route.
OracleResult oracle_sector_volume(const SymmetricTetrahedron& tetra, int vertex, double s,
                                  const OracleOptions& opts = {});

/// Same region specified by a horoball and the three ideal points the apex
/// edges run toward.
OracleResult oracle_sector_volume(const Horoball& h,
                                  const std::array<ProjectivePoint, 3>& edge_ends,
                                  const OracleOptions& opts = {});

/// Plain 3-D membership Monte Carlo of a hyperbolic metric ball of radius r
/// centred at the model origin (bounded integrand there). Sanity check for
/// the volume-density normalization; closed form is pi*(sinh(2r) - 2r).
OracleResult oracle_metric_ball_volume(double radius, long points = 2000000,
                                       std::uint64_t seed = 12345);

} // namespace horo
