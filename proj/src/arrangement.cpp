#include "horopack/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "horopack/volumes.hpp"

namespace horo {

namespace {

constexpr double kTinyStep = 1e-12;

std::string pair_name(int i, int j) {
    if (i > j)
        std::swap(i, j);
    char buf[32];
    std::snprintf(buf, sizeof buf, "pair(%d,%d)", i, j);
    return buf;
}

std::string face_name(int i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "face(%d)", i);
    return buf;
}

} // namespace

const char* scenario_name(ScenarioId id) {
    switch (id) {
    case ScenarioId::S1: return "S1";
    case ScenarioId::S2: return "S2";
    case ScenarioId::S3: return "S3";
    case ScenarioId::S4: return "S4";
    case ScenarioId::M1: return "M1";
    case ScenarioId::M1R: return "M1R";
    case ScenarioId::M2: return "M2";
    case ScenarioId::M3: return "M3";
    case ScenarioId::M4: return "M4";
    }
    return "?";
}

ScenarioId scenario_from_name(const std::string& name) {
    for (ScenarioId id : all_scenarios())
        if (name == scenario_name(id))
            return id;
    throw InvalidInput("unknown scenario name: " + name);
}

std::vector<ScenarioId> all_scenarios() {
    return {ScenarioId::S1, ScenarioId::S2, ScenarioId::S3, ScenarioId::S4, ScenarioId::M1,
            ScenarioId::M1R, ScenarioId::M2, ScenarioId::M3, ScenarioId::M4};
}

std::vector<ScenarioId> mirrored_scenarios() {
    return {ScenarioId::M1, ScenarioId::M1R, ScenarioId::M2, ScenarioId::M3, ScenarioId::M4};
}

const Scenario& scenario(ScenarioId id) {
    static const std::map<ScenarioId, Scenario> table = [] {
        std::map<ScenarioId, Scenario> m;
        auto add = [&m](Scenario s) { m.emplace(s.id, std::move(s)); };
        // z > 0 family. B1, B2 keep the mirror symmetry except where a
        // single ball is expanded (S3/S4 expand B2; the mirror image is
        // isometric, with equal density).
        add({ScenarioId::S1, "S1",
             {SeedPairTangent{1, 2}, PairTangent{3, 1}, PairTangent{0, 3}},
             false, false, 0.0, 1.0});
        add({ScenarioId::S2, "S2",
             {FaceTangent{3}, PairTangent{1, 3}, PairTangent{2, 3}, PairTangent{0, 3}},
             false, false, 0.0, 1.0});
        add({ScenarioId::S3, "S3",
             {FaceTangent{3}, PairTangent{0, 3}, PairTangent{2, 3}, PairTangent{1, 2}},
             false, false, 0.0, 1.0});
        add({ScenarioId::S4, "S4",
             {FaceTangent{3}, FaceTangent{2}, PairTangent{0, 3}, PairTangent{1, 2}},
             false, false, 0.0, 1.0});
        // z < 0 family: the seed tangencies form the cycle B0-B1, B0-B2,
        // B1-B3, B2-B3; M1/M1R are its feasibility endpoints, M2..M4 the
        // face-tangent chains.
        add({ScenarioId::M1, "M1", {}, true, true, -1.0, 0.0});
        add({ScenarioId::M1R, "M1R", {}, true, false, -1.0, 0.0});
        add({ScenarioId::M2, "M2",
             {FaceTangent{0}, PairTangent{1, 0}, PairTangent{2, 0}, PairTangent{3, 1}},
             false, false, -1.0, 0.0});
        add({ScenarioId::M3, "M3",
             {FaceTangent{3}, PairTangent{1, 3}, PairTangent{2, 3}, PairTangent{0, 1}},
             false, false, -1.0, 0.0});
        add({ScenarioId::M4, "M4",
             {FaceTangent{1}, FaceTangent{2}, PairTangent{0, 1}, PairTangent{3, 1}},
             false, false, -1.0, 0.0});
        return m;
    }();
    return table.at(id);
}

double tetra_sector_volume(const SymmetricTetrahedron& tetra, int i, double s_i,
                           ChordConvention conv) {
    const Horoball h(tetra.vertex[i], s_i);
    if (plane_margin(h, tetra.face[i]) < -kPackingSlack)
        throw PackingViolation(face_name(i), plane_margin(h, tetra.face[i]),
                               "sector_volume: ball crosses its opposite face");
    const auto o = tetra.others(i);
    return sector_volume(h, {tetra.vertex[o[0]], tetra.vertex[o[1]], tetra.vertex[o[2]]}, conv);
}

namespace {

void fill_geometry(Arrangement& arr, ChordConvention conv = ChordConvention::HalfChord) {
    const SymmetricTetrahedron& t = arr.tetra;
    for (int i = 0; i < 4; ++i) {
        const Horoball h = arr.ball(i);
        for (int j = 0; j < 4; ++j)
            if (j != i)
                arr.crossing[i][j] = own_edge_crossing(h, t.vertex[j]).point;
        arr.sector[i] = tetra_sector_volume(t, i, arr.s[i], conv);
    }
    arr.sector_sum = arr.sector[0] + arr.sector[1] + arr.sector[2] + arr.sector[3];
    arr.density = arr.sector_sum / t.volume;
}

} // namespace

PackingReport verify_packing(const Arrangement& arr) {
    PackingReport rep;
    rep.min_margin = 1e300;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const double m = pair_margin(arr.ball(i), arr.ball(j));
            rep.rows.push_back({pair_name(i, j), m, std::abs(m) < kBindingTol});
            rep.min_margin = std::min(rep.min_margin, m);
        }
    for (int i = 0; i < 4; ++i) {
        const double m = plane_margin(arr.ball(i), arr.tetra.face[i]);
        rep.rows.push_back({face_name(i), m, std::abs(m) < kBindingTol});
        rep.min_margin = std::min(rep.min_margin, m);
    }
    rep.pass = rep.min_margin >= -kPackingSlack;
    return rep;
}

Arrangement arrangement_from_sizes(ScenarioId id, const SymmetricTetrahedron& tetra,
                                   const std::array<double, 4>& sizes, bool verify) {
    Arrangement arr;
    arr.scenario_id = id;
    arr.tetra = tetra;
    arr.s = sizes;
    fill_geometry(arr);
    if (verify) {
        const PackingReport rep = verify_packing(arr);
        if (!rep.pass) {
            const auto worst = std::min_element(
                rep.rows.begin(), rep.rows.end(),
                [](const ConstraintMargin& a, const ConstraintMargin& b) {
                    return a.margin < b.margin;
                });
            throw PackingViolation(worst->name, worst->margin,
                                   "packing violated at " + worst->name);
        }
    }
    return arr;
}

double density(const Arrangement& arr) {
    const double d = arr.sector_sum / arr.tetra.volume;
    if (!(d > 0.0 && d < 1.0))
        throw DomainError("density: outside (0, 1), arrangement is not a packing");
    return d;
}

namespace {

Arrangement solve_chain(const Scenario& scn, double z) {
    const SymmetricTetrahedron tetra = build_tetrahedron(z);
    std::array<double, 4> s{};
    std::array<bool, 4> fixed{};
    std::vector<TangencyCertificate> certs;

    for (const Constraint& c : scn.chain) {
        if (const auto* seed = std::get_if<SeedPairTangent>(&c)) {
            // Mirror-symmetric pair pinned by mutual tangency on the mirror
            // plane: the touch point is the affine edge midpoint.
            const ProjectivePoint touch =
                affine_lerp(tetra.vertex[seed->i], tetra.vertex[seed->j], 0.5);
            const double si = s_through_point(tetra.vertex[seed->i], touch);
            s[seed->i] = si;
            s[seed->j] = si;
            fixed[seed->i] = fixed[seed->j] = true;
            certs.push_back({pair_name(seed->i, seed->j), touch});
        } else if (const auto* ft = std::get_if<FaceTangent>(&c)) {
            const PlaneTangency pt = tangent_s_to_plane(tetra.vertex[ft->i], tetra.face[ft->i]);
            s[ft->i] = pt.s;
            fixed[ft->i] = true;
            certs.push_back({face_name(ft->i), pt.touch});
        } else if (const auto* pt2 = std::get_if<PairTangent>(&c)) {
            if (!fixed[pt2->j])
                throw InfeasibleScenario(pair_name(pt2->i, pt2->j),
                                         "scenario chain references an unfixed ball");
            const BallTangency bt =
                tangent_s_to_horoball(tetra.vertex[pt2->j], s[pt2->j], tetra.vertex[pt2->i]);
            s[pt2->i] = bt.s;
            fixed[pt2->i] = true;
            certs.push_back({pair_name(pt2->i, pt2->j), bt.touch});
        }
    }
    for (int i = 0; i < 4; ++i)
        if (!fixed[i])
            throw InfeasibleScenario("ball " + std::to_string(i),
                                     "scenario chain leaves a ball unfixed");

    Arrangement arr = arrangement_from_sizes(scn.id, tetra, s);
    arr.bindings = std::move(certs);
    return arr;
}

// One-parameter family for the z < 0 cycle: s0 determines s1 = s2 (tangent
// to B0 along E0E1/E0E2) and s3 (tangent to B1 along E1E3).
std::array<double, 4> cycle_sizes(const SymmetricTetrahedron& tetra, double s0) {
    const BallTangency t01 = tangent_s_to_horoball(tetra.vertex[0], s0, tetra.vertex[1]);
    const BallTangency t13 = tangent_s_to_horoball(tetra.vertex[1], t01.s, tetra.vertex[3]);
    return {s0, t01.s, t01.s, t13.s};
}

bool cycle_feasible(const SymmetricTetrahedron& tetra, double s0) {
    try {
        const Arrangement arr =
            arrangement_from_sizes(ScenarioId::M1, tetra, cycle_sizes(tetra, s0));
        (void)arr;
        return true;
    } catch (const PackingViolation&) {
        return false;
    } catch (const DomainError&) {
        return false;
    }
}

Arrangement solve_cycle_extremal(const Scenario& scn, double z) {
    const SymmetricTetrahedron tetra = build_tetrahedron(z);

    // Find one feasible s0, then push to the requested endpoint. Feasibility
    // in s0 is an interval (every margin is monotone along the cycle).
    double s_feas = 2.0;
    for (int k = 1; k < 64 && s_feas > 1.0; ++k) {
        const double cand = -1.0 + 2.0 * k / 64.0;
        if (cycle_feasible(tetra, cand))
            s_feas = cand;
    }
    if (s_feas > 1.0)
        throw InfeasibleScenario("cycle", "no feasible cycle configuration at this z");

    double inside = s_feas;
    double outside = scn.cycle_grow_b0 ? -1.0 : 1.0;
    for (int i = 0; i < 60 && std::abs(inside - outside) > 1e-13; ++i) {
        const double mid = 0.5 * (inside + outside);
        if (cycle_feasible(tetra, mid))
            inside = mid;
        else
            outside = mid;
    }

    Arrangement arr = arrangement_from_sizes(scn.id, tetra, cycle_sizes(tetra, inside));
    const ProjectivePoint t01 =
        own_edge_crossing(arr.ball(0), tetra.vertex[1]).point;
    const ProjectivePoint t02 =
        own_edge_crossing(arr.ball(0), tetra.vertex[2]).point;
    const ProjectivePoint t13 =
        own_edge_crossing(arr.ball(1), tetra.vertex[3]).point;
    const ProjectivePoint t23 =
        own_edge_crossing(arr.ball(2), tetra.vertex[3]).point;
    arr.bindings = {{pair_name(0, 1), t01},
                    {pair_name(0, 2), t02},
                    {pair_name(1, 3), t13},
                    {pair_name(2, 3), t23}};
    // Record the endpoint constraint discovered by the bisection.
    for (const ConstraintMargin& row : verify_packing(arr).rows)
        if (row.binding && row.name != pair_name(0, 1) && row.name != pair_name(0, 2) &&
            row.name != pair_name(1, 3) && row.name != pair_name(2, 3))
            arr.bindings.push_back({row.name, arr.tetra.vertex[0]});
    return arr;
}

} // namespace

Arrangement solve_scenario(ScenarioId id, double z) {
    const Scenario& scn = scenario(id);
    if (!(z >= scn.domain_lo && z <= scn.domain_hi))
        throw InfeasibleScenario("domain", std::string(scenario_name(id)) +
                                               ": z outside the scenario domain");
    return scn.cycle_extremal ? solve_cycle_extremal(scn, z) : solve_chain(scn, z);
}

bool scenario_feasible(ScenarioId id, double z) {
    try {
        (void)solve_scenario(id, z);
        return true;
    } catch (const InfeasibleScenario&) {
        return false;
    } catch (const PackingViolation&) {
        return false;
    } catch (const DomainError&) {
        return false;
    }
}

Interval scenario_interval(ScenarioId id) {
    const Scenario& scn = scenario(id);
    const double lo_lim = scn.domain_lo + kTinyStep;
    const double hi_lim = scn.domain_hi - kTinyStep;

    // Locate a feasible point on a coarse grid first.
    double feas = 2.0;
    const int grid = 256;
    for (int k = 0; k <= grid && feas > 1.0; ++k) {
        const double zc = lo_lim + (hi_lim - lo_lim) * k / grid;
        if (scenario_feasible(id, zc))
            feas = zc;
    }
    if (feas > 1.0)
        throw InfeasibleScenario("interval", std::string(scenario_name(id)) +
                                                 ": scenario is nowhere feasible");

    auto bisect_boundary = [&](double inside, double outside) {
        if (scenario_feasible(id, outside))
            return outside;
        while (std::abs(inside - outside) > 1e-10) {
            const double mid = 0.5 * (inside + outside);
            if (scenario_feasible(id, mid))
                inside = mid;
            else
                outside = mid;
        }
        return inside;
    };
    Interval iv;
    iv.lo = bisect_boundary(feas, lo_lim);
    iv.hi = bisect_boundary(feas, hi_lim);
    return iv;
}

Arrangement same_type_arrangement(double z) {
    const SymmetricTetrahedron tetra = build_tetrahedron(z);

    // Size each ball for a prescribed sector volume (monotone in s).
    auto size_for_volume = [&tetra](int i, double v) {
        double lo = -1.0 + 1e-9, hi = 1.0 - 1e-9;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            const Horoball h(tetra.vertex[i], mid);
            const auto o = tetra.others(i);
            const double vol = sector_volume(
                h, {tetra.vertex[o[0]], tetra.vertex[o[1]], tetra.vertex[o[2]]});
            if (vol > v)
                lo = mid; // ball too large; shrink by raising s
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    auto sizes_at = [&](double v) {
        std::array<double, 4> s{};
        s[0] = size_for_volume(0, v);
        s[1] = size_for_volume(1, v);
        s[2] = s[1]; // mirror symmetry
        s[3] = size_for_volume(3, v);
        return s;
    };
    auto min_margin_at = [&](double v) {
        Arrangement arr;
        arr.scenario_id = ScenarioId::S1;
        arr.tetra = tetra;
        arr.s = sizes_at(v);
        double mn = 1e300;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                mn = std::min(mn, pair_margin(arr.ball(i), arr.ball(j)));
        for (int i = 0; i < 4; ++i)
            mn = std::min(mn, plane_margin(arr.ball(i), tetra.face[i]));
        return mn;
    };

    // Bracket the first-contact volume, then bisect to the contact.
    double v_lo = 1e-6, v_hi = 1e-6;
    while (min_margin_at(v_hi) > 0.0 && v_hi < 1e6)
        v_hi *= 2.0;
    if (v_hi >= 1e6)
        throw DomainError("same_type_arrangement: failed to bracket first contact");
    v_lo = v_hi / 2.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (v_lo + v_hi);
        if (min_margin_at(mid) > 0.0)
            v_lo = mid;
        else
            v_hi = mid;
    }
    Arrangement arr = arrangement_from_sizes(ScenarioId::S1, tetra, sizes_at(v_lo));
    for (const ConstraintMargin& row : verify_packing(arr).rows)
        if (row.binding)
            arr.bindings.push_back({row.name, arr.tetra.vertex[0]});
    return arr;
}

double growth_value(const GrowthProfile& p) {
    if (!(p.v0 > 0.0))
        throw DomainError("growth_value: V0 must be positive");
    return 0.5 * p.v0 * (std::exp(2.0 * p.x) + std::exp(-2.0 * p.x));
}

double two_sector_profile(double v0, double x1, double x) {
    if (!(v0 > 0.0))
        throw DomainError("two_sector_profile: V0 must be positive");
    return 0.5 * v0 * std::exp(-2.0 * (x - x1)) + 0.25 * v0 * std::exp(2.0 * x) +
           0.25 * v0 * std::exp(-2.0 * x);
}

BalancedEdgeTangency balanced_tangency_on_axis_edge(const SymmetricTetrahedron& tetra) {
    const ProjectivePoint& e0 = tetra.vertex[0];
    const ProjectivePoint& e3 = tetra.vertex[3];
    const auto o0 = tetra.others(0);
    const auto o3 = tetra.others(3);

    auto volumes_at = [&](double t) {
        const ProjectivePoint p = affine_lerp(e0, e3, t);
        const Horoball b0(e0, s_through_point(e0, p));
        const Horoball b3(e3, s_through_point(e3, p));
        const double v0 =
            sector_volume(b0, {tetra.vertex[o0[0]], tetra.vertex[o0[1]], tetra.vertex[o0[2]]});
        const double v3 =
            sector_volume(b3, {tetra.vertex[o3[0]], tetra.vertex[o3[1]], tetra.vertex[o3[2]]});
        return std::pair<double, double>(v0, v3);
    };

    // V0 grows and V3 shrinks as t runs from E0 toward E3.
    double lo = 1e-6, hi = 1.0 - 1e-6;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto [v0, v3] = volumes_at(mid);
        if (v0 < v3)
            lo = mid;
        else
            hi = mid;
    }
    BalancedEdgeTangency out;
    out.t = 0.5 * (lo + hi);
    out.point = affine_lerp(e0, e3, out.t);
    out.v_half = volumes_at(out.t).first;
    return out;
}

double two_sector_displaced(const SymmetricTetrahedron& tetra, double x) {
    const BalancedEdgeTangency base = balanced_tangency_on_axis_edge(tetra);
    const ProjectivePoint& e0 = tetra.vertex[0];
    const ProjectivePoint& e3 = tetra.vertex[3];

    double t;
    if (x == 0.0) {
        t = base.t;
    } else {
        // Positive x displaces the tangency toward E0 (B3 grows).
        double lo, hi;
        if (x > 0.0) {
            lo = 1e-9;
            hi = base.t;
        } else {
            lo = base.t;
            hi = 1.0 - 1e-9;
        }
        const double target = std::abs(x);
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double d = hyperbolic_distance(affine_lerp(e0, e3, mid), base.point);
            const bool too_far = d > target;
            if (x > 0.0) {
                if (too_far)
                    lo = mid;
                else
                    hi = mid;
            } else {
                if (too_far)
                    hi = mid;
                else
                    lo = mid;
            }
        }
        t = 0.5 * (lo + hi);
    }

    const ProjectivePoint p = affine_lerp(e0, e3, t);
    const auto o0 = tetra.others(0);
    const auto o3 = tetra.others(3);
    const Horoball b0(e0, s_through_point(e0, p));
    const Horoball b3(e3, s_through_point(e3, p));
    return sector_volume(b0, {tetra.vertex[o0[0]], tetra.vertex[o0[1]], tetra.vertex[o0[2]]}) +
           sector_volume(b3, {tetra.vertex[o3[0]], tetra.vertex[o3[1]], tetra.vertex[o3[2]]});
}

} // namespace horo
