#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "horopack/horoball.hpp"
#include "horopack/tetrahedron.hpp"

namespace horo {

enum class ScenarioId { S1, S2, S3, S4, M1, M1R, M2, M3, M4 };

const char* scenario_name(ScenarioId id);
ScenarioId scenario_from_name(const std::string& name);
std::vector<ScenarioId> all_scenarios();
std::vector<ScenarioId> mirrored_scenarios(); // the z < 0 family

/// Fixes s_i = s_j from a prescribed touch point on the mirror plane.
struct SeedPairTangent {
    int i, j;
};
/// Fixes s_i by tangency to the face opposite vertex i.
struct FaceTangent {
    int i;
};
/// Fixes s_i by tangency to the previously fixed ball j.
struct PairTangent {
    int i, j;
};
using Constraint = std::variant<SeedPairTangent, FaceTangent, PairTangent>;

/// A tangency-constraint scenario. Chain scenarios resolve one ball per
/// constraint in order; cycle-extremal scenarios (z < 0 family) slide the
/// one-parameter cycle of seed tangencies B0-B1, B0-B2, B1-B3, B2-B3 to a
/// feasibility endpoint.
struct Scenario {
    ScenarioId id;
    std::string name;
    std::vector<Constraint> chain;
    bool cycle_extremal = false;
    bool cycle_grow_b0 = false; // endpoint direction for cycle scenarios
    double domain_lo = 0.0;     // coarse z-domain to search for feasibility
    double domain_hi = 1.0;
};

const Scenario& scenario(ScenarioId id);

struct TangencyCertificate {
    std::string name; // "pair(i,j)" or "face(i)"
    ProjectivePoint touch;
};

/// A solved, packing-verified horoball arrangement on T(z).
struct Arrangement {
    ScenarioId scenario_id{};
    SymmetricTetrahedron tetra;
    std::array<double, 4> s{};
    std::array<double, 4> sector{};
    double sector_sum = 0.0;
    double density = 0.0;
    std::vector<TangencyCertificate> bindings;
    /// crossing[i][j]: surface point of ball i on the edge toward vertex j.
    std::array<std::array<ProjectivePoint, 4>, 4> crossing;

    Horoball ball(int i) const { return Horoball(tetra.vertex[i], s[i]); }
};

struct ConstraintMargin {
    std::string name;
    double margin = 0.0; // hyperbolic length units; negative = violated
    bool binding = false;
};

struct PackingReport {
    std::vector<ConstraintMargin> rows;
    double min_margin = 0.0;
    bool pass = false;
};

inline constexpr double kPackingSlack = 1e-9;
inline constexpr double kBindingTol = 1e-8;

/// Non-overlap of every horoball pair and at-most-tangential contact with
/// every opposite face, with per-constraint margins.
PackingReport verify_packing(const Arrangement& arr);

/// Resolves the scenario's constraints at shape parameter z and returns a
/// verified arrangement. Throws InfeasibleScenario naming the first
/// unsatisfiable constraint, or PackingViolation if the solved configuration
/// fails verify_packing.
Arrangement solve_scenario(ScenarioId id, double z);

/// Builds an arrangement from explicit sizes (no tangency constraints
/// imposed); packing is still verified unless `verify` is false.
Arrangement arrangement_from_sizes(ScenarioId id, const SymmetricTetrahedron& tetra,
                                   const std::array<double, 4>& sizes, bool verify = true);

/// Sector-volume sum over tetra volume, in (0, 1).
double density(const Arrangement& arr);

bool scenario_feasible(ScenarioId id, double z);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Feasibility interval of the scenario inside its coarse domain, boundaries
/// located by bisection to 1e-10.
Interval scenario_interval(ScenarioId id);

/// All four horoballs sized for equal sector volumes, grown until the first
/// pair or face contact ("same type" seed; the z = 0 case of the regular
/// arrangement).
Arrangement same_type_arrangement(double z);

/// Two-ball sector growth law V(x) = (V0/2)(e^{2x} + e^{-2x}).
struct GrowthProfile {
    double v0 = 0.0;
    double x = 0.0;
};
double growth_value(const GrowthProfile& p);

/// Profile V2(x) = (V0/2) e^{-2(x-x1)} + (V0/4) e^{2x} + (V0/4) e^{-2x}.
double two_sector_profile(double v0, double x1, double x);

/// Geometric counterpart of the growth law on edge E0E3: the balanced
/// tangency point (equal B0/B3 sector volumes) and the summed sector volume
/// after displacing the tangency by hyperbolic distance x toward E0.
struct BalancedEdgeTangency {
    ProjectivePoint point;
    double t = 0.0;      // edge parameter from E0
    double v_half = 0.0; // common sector volume V(0)/2
};
BalancedEdgeTangency balanced_tangency_on_axis_edge(const SymmetricTetrahedron& tetra);
double two_sector_displaced(const SymmetricTetrahedron& tetra, double x);

/// Sector volume of a ball of size s_i at vertex i, with the card <= 1
/// opposite-face precondition enforced.
double tetra_sector_volume(const SymmetricTetrahedron& tetra, int i, double s_i,
                           ChordConvention conv = ChordConvention::HalfChord);

} // namespace horo
