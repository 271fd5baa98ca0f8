#include "horopack/horoball.hpp"

#include <algorithm>
#include <cmath>

namespace horo {

namespace {

struct Affine3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

Affine3 affine(const ProjectivePoint& p) {
    const ProjectivePoint n = normalized(p);
    return {n[1], n[2], n[3]};
}

double dot(const Affine3& a, const Affine3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Affine3 sub(const Affine3& a, const Affine3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

// Axis coordinates of an affine point relative to a unit center direction:
// height along the axis and squared transverse radius.
struct AxisCoords {
    double zp = 0.0;
    double rho2 = 0.0;
};

AxisCoords axis_coords(const std::array<double, 3>& d, const Affine3& p) {
    const double zp = p.x * d[0] + p.y * d[1] + p.z * d[2];
    const double n2 = dot(p, p);
    return {zp, std::max(0.0, n2 - zp * zp)};
}

void require_size(double s, const char* where) {
    if (!(s > -1.0 && s < 1.0))
        throw DomainError(std::string(where) + ": size parameter must lie in (-1, 1)");
}

} // namespace

Horoball::Horoball(const ProjectivePoint& c, double size) : center(normalized(c)), s(size) {
    if (classify(center) != PointClass::Ideal)
        throw DomainError("Horoball: center must be an ideal point");
    require_size(size, "Horoball");
}

std::array<double, 3> Horoball::direction() const {
    const Affine3 a = affine(center);
    const double n = std::sqrt(dot(a, a));
    return {a.x / n, a.y / n, a.z / n};
}

Quadric canonical_horosphere_quadric(double s) {
    require_size(s, "canonical_horosphere_quadric");
    std::array<std::array<double, 4>, 4> c{};
    c[0][0] = -2.0 * s;
    c[3][3] = -2.0;
    c[0][3] = s + 1.0;
    c[3][0] = s + 1.0;
    c[1][1] = s - 1.0;
    c[2][2] = s - 1.0;
    return Quadric::from_coefficients(c);
}

Transform4 transport_to_center(const ProjectivePoint& center) {
    if (classify(center) != PointClass::Ideal)
        throw DomainError("transport_to_center: center must be ideal");
    const Affine3 a = affine(center);
    const double n = std::sqrt(dot(a, a));
    const double dx = a.x / n, dy = a.y / n, dz = a.z / n;

    // Rodrigues rotation taking (0,0,1) to (dx,dy,dz); axis = e3 x d.
    double ax = -dy, ay = dx, az = 0.0;
    const double sin_t = std::sqrt(ax * ax + ay * ay);
    const double cos_t = dz;

    Transform4 t = Transform4::identity();
    auto& m = t.m;
    if (sin_t < 1e-14) {
        if (cos_t > 0.0)
            return t; // already canonical
        // Antipodal center: half-turn about the x1-axis.
        m[2][2] = -1.0;
        m[3][3] = -1.0;
        return t;
    }
    ax /= sin_t;
    ay /= sin_t;
    const double c = cos_t, s = sin_t, omc = 1.0 - cos_t;
    const double r[3][3] = {
        {c + ax * ax * omc, ax * ay * omc - az * s, ax * az * omc + ay * s},
        {ay * ax * omc + az * s, c + ay * ay * omc, ay * az * omc - ax * s},
        {az * ax * omc - ay * s, az * ay * omc + ax * s, c + az * az * omc},
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i + 1][j + 1] = r[i][j];
    return t;
}

Quadric horosphere_quadric(const Horoball& h) {
    const Transform4 t = transport_to_center(h.center);
    // Zero set {x : q_can(T^{-1} x) = 0}; for the rotation, T^{-1} = T^T.
    return t.transposed().pull_back(canonical_horosphere_quadric(h.s));
}

double s_through_point(const ProjectivePoint& center, const ProjectivePoint& p) {
    if (classify(center) != PointClass::Ideal)
        throw DomainError("s_through_point: center must be ideal");
    if (classify(p) != PointClass::Interior)
        throw DomainError("s_through_point: point must be interior");
    const Horoball probe(center, 0.0);
    const auto d = probe.direction();
    const AxisCoords ac = axis_coords(d, affine(p));
    // Interior points keep the denominator strictly negative.
    return (ac.rho2 + 2.0 * ac.zp * (ac.zp - 1.0)) / (ac.rho2 + 2.0 * (ac.zp - 1.0));
}

double horoball_excess(const Horoball& h, const ProjectivePoint& p) {
    const auto d = h.direction();
    const AxisCoords ac = axis_coords(d, affine(p));
    // -(1-s)rho2 - (1+s)zp^2 + 2(1+s)zp - 2s: positive strictly inside.
    return -(1.0 - h.s) * ac.rho2 - (1.0 + h.s) * ac.zp * ac.zp + 2.0 * (1.0 + h.s) * ac.zp -
           2.0 * h.s;
}

namespace {

// g(t) = A t^2 + B t + C along the affine segment a + t(b-a), with the
// convention g < 0 strictly inside the horoball.
struct EdgeQuadratic {
    double A = 0.0, B = 0.0, C = 0.0;
};

EdgeQuadratic ball_edge_quadratic(const Horoball& h, const Affine3& a, const Affine3& b) {
    const auto dir = h.direction();
    const Affine3 e = sub(b, a);
    const double za = a.x * dir[0] + a.y * dir[1] + a.z * dir[2];
    const double dz = e.x * dir[0] + e.y * dir[1] + e.z * dir[2];
    const double s = h.s;
    EdgeQuadratic q;
    q.A = (1.0 - s) * dot(e, e) + (1.0 + s) * dz * dz;
    q.B = 2.0 * (1.0 - s) * dot(a, e) + 2.0 * (1.0 + s) * dz * (za - 1.0);
    q.C = (1.0 - s) * dot(a, a) + (1.0 + s) * za * za - 2.0 * (1.0 + s) * za + 2.0 * s;
    return q;
}

bool same_ideal_point(const ProjectivePoint& p, const ProjectivePoint& q) {
    const Affine3 a = affine(p), b = affine(q);
    const Affine3 d = sub(a, b);
    return dot(d, d) < 1e-24;
}

} // namespace

std::vector<SurfaceHit> surface_points_on_edge(const Horoball& h, const ProjectivePoint& a,
                                               const ProjectivePoint& b) {
    const Affine3 aa = affine(a), bb = affine(b);
    {
        const Affine3 d = sub(aa, bb);
        if (dot(d, d) == 0.0)
            throw DegenerateInput("surface_points_on_edge: degenerate segment");
    }
    const EdgeQuadratic q = ball_edge_quadratic(h, aa, bb);
    const double scale = std::max({std::abs(q.A), std::abs(q.B), std::abs(q.C)});

    std::vector<SurfaceHit> hits;
    auto emit = [&](double t, bool tangent) {
        if (t < -1e-12 || t > 1.0 + 1e-12)
            return;
        t = std::clamp(t, 0.0, 1.0);
        hits.push_back({affine_lerp(a, b, t), t, tangent});
    };

    const bool a_is_center = same_ideal_point(a, h.center);
    const bool b_is_center = same_ideal_point(b, h.center);

    const double disc = q.B * q.B - 4.0 * q.A * q.C;
    const double disc_scale = std::max(q.B * q.B, std::abs(4.0 * q.A * q.C));
    if (std::abs(q.A) <= 1e-15 * scale) {
        if (std::abs(q.B) > 1e-15 * scale)
            emit(-q.C / q.B, false);
        return hits;
    }
    if (disc < -1e-12 * disc_scale)
        return hits;
    if (disc <= 1e-14 * disc_scale) {
        emit(-q.B / (2.0 * q.A), true);
        return hits;
    }
    const double sq = std::sqrt(std::max(0.0, disc));
    const double qq = -0.5 * (q.B + (q.B >= 0.0 ? sq : -sq));
    const double t1 = qq / q.A;
    const double t2 = (qq != 0.0) ? q.C / qq : 0.0;
    for (double t : {std::min(t1, t2), std::max(t1, t2)}) {
        // The ideal center itself sits on the quadric; drop that root.
        if (a_is_center && std::abs(t) < 1e-9)
            continue;
        if (b_is_center && std::abs(t - 1.0) < 1e-9)
            continue;
        emit(t, false);
    }
    return hits;
}

SurfaceHit own_edge_crossing(const Horoball& h, const ProjectivePoint& toward) {
    const Affine3 a = affine(h.center), b = affine(toward);
    const EdgeQuadratic q = ball_edge_quadratic(h, a, b);
    // The center is on the quadric, so C vanishes (up to rounding) and
    // g(t) = t (A t + B); one Newton step absorbs the residual C.
    if (q.A == 0.0)
        throw DegenerateInput("own_edge_crossing: degenerate edge");
    double t = -q.B / q.A;
    const double slope = 2.0 * q.A * t + q.B;
    if (slope != 0.0)
        t -= (q.A * t * t + q.B * t + q.C) / slope;
    if (!(t > 0.0 && t <= 1.0 + 1e-12))
        throw DomainError("own_edge_crossing: no crossing inside the edge");
    t = std::min(t, 1.0);
    return {affine_lerp(h.center, toward, t), t, false};
}

PlaneTangency tangent_s_to_plane(const ProjectivePoint& center, const PlaneCovector& plane) {
    if (classify(center) != PointClass::Ideal)
        throw DomainError("tangent_s_to_plane: center must be ideal");
    const double incidence = std::abs(plane.value(center));
    const double scale = std::max({std::abs(plane.u[0]), std::abs(plane.u[1]),
                                   std::abs(plane.u[2]), std::abs(plane.u[3])});
    if (incidence <= 1e-12 * scale)
        throw DegenerateInput("tangent_s_to_plane: center lies on the plane");
    const ProjectivePoint foot = normalized(foot_of_perpendicular(center, plane));
    return {s_through_point(center, foot), foot};
}

namespace {

// Signed gap between the surfaces of (ca, sa) and (cb, sb) along the segment
// of centers; positive when disjoint. The segment's endpoints are the ideal
// points of its line, so the chord distance has the exact cross-ratio form
// d = (1/2) log(t_b (1-t_a) / (t_a (1-t_b))), which keeps full resolution
// near tangency where the acosh route bottoms out around 1e-8.
double center_line_gap(const Horoball& a, const Horoball& b) {
    const SurfaceHit ha = own_edge_crossing(a, b.center);
    // Same parameterization for b: measure b's crossing from ca as well.
    const SurfaceHit hb_rev = own_edge_crossing(b, a.center);
    const double ta = ha.t;
    const double tb = 1.0 - hb_rev.t;
    return 0.5 * std::log((tb * (1.0 - ta)) / (ta * (1.0 - tb)));
}

} // namespace

BallTangency tangent_s_to_horoball(const ProjectivePoint& center_a, double s_a,
                                   const ProjectivePoint& center_b) {
    require_size(s_a, "tangent_s_to_horoball");
    const Horoball a(center_a, s_a);
    if (same_ideal_point(a.center, normalized(center_b)))
        throw DegenerateInput("tangent_s_to_horoball: centers coincide");

    // The gap is continuous and strictly increasing in s_b.
    double lo = -1.0, hi = 1.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi))
            break;
        const Horoball b(center_b, mid);
        if (center_line_gap(a, b) >= 0.0)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 1e-13)
            break;
    }
    const double s_b = 0.5 * (lo + hi);
    return {s_b, own_edge_crossing(a, center_b).point};
}

double pair_margin(const Horoball& a, const Horoball& b) { return center_line_gap(a, b); }

double plane_margin(const Horoball& h, const PlaneCovector& plane) {
    const PlaneTangency t = tangent_s_to_plane(h.center, plane);
    // Concentric horospheres keep a constant normal distance.
    return std::atanh(h.s) - std::atanh(t.s);
}

double intrinsic_length(const Horoball& h, const ProjectivePoint& p, const ProjectivePoint& q,
                        ChordConvention conv) {
    for (const ProjectivePoint* pt : {&p, &q}) {
        const double res = std::abs(s_through_point(h.center, *pt) - h.s);
        if (res > 1e-8)
            throw DomainError("intrinsic_length: point off the horosphere surface");
    }
    const Affine3 pa = affine(p), qa = affine(q);
    const Affine3 d = sub(pa, qa);
    if (dot(d, d) == 0.0)
        return 0.0;
    const double chord = hyperbolic_distance(p, q);
    return conv == ChordConvention::HalfChord ? 2.0 * std::sinh(0.5 * chord) : std::sinh(chord);
}

double heron_area(double a, double b, double c) {
    // Kahan's ordering-stable form.
    if (a < b)
        std::swap(a, b);
    if (b < c)
        std::swap(b, c);
    if (a < b)
        std::swap(a, b);
    const double t = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    if (t < 0.0) {
        if (t < -1e-12 * a * a * a * a)
            throw DomainError("heron_area: side lengths violate the triangle inequality");
        return 0.0;
    }
    return 0.25 * std::sqrt(t);
}

HorosphericalTriangle horospherical_triangle(const Horoball& h,
                                             const std::array<ProjectivePoint, 3>& pts,
                                             ChordConvention conv) {
    HorosphericalTriangle tri;
    tri.points = pts;
    tri.sides[0] = intrinsic_length(h, pts[1], pts[2], conv);
    tri.sides[1] = intrinsic_length(h, pts[0], pts[2], conv);
    tri.sides[2] = intrinsic_length(h, pts[0], pts[1], conv);
    tri.area = heron_area(tri.sides[0], tri.sides[1], tri.sides[2]);
    return tri;
}

double sector_volume(const Horoball& h, const std::array<ProjectivePoint, 3>& edge_ends,
                     ChordConvention conv) {
    std::array<ProjectivePoint, 3> pts;
    for (int i = 0; i < 3; ++i)
        pts[i] = own_edge_crossing(h, edge_ends[i]).point;
    const HorosphericalTriangle tri = horospherical_triangle(h, pts, conv);
    return 0.5 * tri.area; // Bolyai: V = k A / 2, k = 1
}

} // namespace horo
