#include "horopack/projective.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstdio>

namespace horo {

namespace numerics {

namespace {
std::atomic<long> g_clamp_count{0};
}

long clamp_count() { return g_clamp_count.load(); }
void reset_clamp_count() { g_clamp_count.store(0); }

void note_clamp(const char* where) {
    g_clamp_count.fetch_add(1, std::memory_order_relaxed);
    static const bool verbose = std::getenv("HOROPACK_LOG_CLAMPS") != nullptr;
    if (verbose)
        std::fprintf(stderr, "horopack: numerical clamp in %s\n", where);
}

} // namespace numerics

Vec4 operator+(const Vec4& a, const Vec4& b) {
    return Vec4{{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}};
}

Vec4 operator-(const Vec4& a, const Vec4& b) {
    return Vec4{{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}};
}

Vec4 operator*(double s, const Vec4& a) {
    return Vec4{{s * a[0], s * a[1], s * a[2], s * a[3]}};
}

double PlaneCovector::value(const ProjectivePoint& p) const {
    return u[0] * p[0] + u[1] * p[1] + u[2] * p[2] + u[3] * p[3];
}

Quadric Quadric::absolute() {
    Quadric q;
    q.m[0][0] = -1.0;
    q.m[1][1] = 1.0;
    q.m[2][2] = 1.0;
    q.m[3][3] = 1.0;
    return q;
}

Quadric Quadric::from_coefficients(const std::array<std::array<double, 4>, 4>& coeffs) {
    Quadric q;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            q.m[i][j] = 0.5 * (coeffs[i][j] + coeffs[j][i]);
    return q;
}

double Quadric::eval(const ProjectivePoint& p) const {
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        double row = 0.0;
        for (int j = 0; j < 4; ++j)
            row += m[i][j] * p[j];
        acc += p[i] * row;
    }
    return acc;
}

double Quadric::max_abs() const {
    double mx = 0.0;
    for (const auto& row : m)
        for (double e : row)
            mx = std::max(mx, std::abs(e));
    return mx;
}

Transform4 Transform4::identity() {
    Transform4 t;
    for (int i = 0; i < 4; ++i)
        t.m[i][i] = 1.0;
    return t;
}

ProjectivePoint Transform4::apply(const ProjectivePoint& p) const {
    Vec4 out;
    for (int i = 0; i < 4; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 4; ++j)
            acc += m[i][j] * p[j];
        out[i] = acc;
    }
    return ProjectivePoint(out);
}

PlaneCovector Transform4::apply_to_covector(const PlaneCovector& u) const {
    PlaneCovector out;
    for (int j = 0; j < 4; ++j) {
        double acc = 0.0;
        for (int i = 0; i < 4; ++i)
            acc += u.u[i] * m[i][j];
        out.u[j] = acc;
    }
    return out;
}

Transform4 Transform4::transposed() const {
    Transform4 t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            t.m[i][j] = m[j][i];
    return t;
}

Transform4 Transform4::compose(const Transform4& rhs) const {
    Transform4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k)
                acc += m[i][k] * rhs.m[k][j];
            out.m[i][j] = acc;
        }
    return out;
}

Quadric Transform4::pull_back(const Quadric& q) const {
    // (T^T Q T), symmetrized against rounding drift.
    std::array<std::array<double, 4>, 4> qt{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k)
                acc += q.m[i][k] * m[k][j];
            qt[i][j] = acc;
        }
    std::array<std::array<double, 4>, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k)
                acc += m[k][i] * qt[k][j];
            out[i][j] = acc;
        }
    return Quadric::from_coefficients(out);
}

double lorentz_product(const Vec4& a, const Vec4& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

double lorentz_product(const ProjectivePoint& a, const ProjectivePoint& b) {
    return lorentz_product(a.x, b.x);
}

namespace {

double euclidean_norm2(const Vec4& a) {
    return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
}

} // namespace

PointClass classify(const ProjectivePoint& p, double eps) {
    const double n2 = euclidean_norm2(p.x);
    if (n2 == 0.0)
        throw InvalidInput("classify: zero vector is not a projective point");
    const double q = lorentz_product(p, p);
    if (std::abs(q) <= eps * n2)
        return PointClass::Ideal;
    return q < 0.0 ? PointClass::Interior : PointClass::Exterior;
}

bool is_ideal(const ProjectivePoint& p, double eps) {
    return classify(p, eps) == PointClass::Ideal;
}

bool is_interior(const ProjectivePoint& p, double eps) {
    return classify(p, eps) == PointClass::Interior;
}

ProjectivePoint normalized(const ProjectivePoint& p) {
    if (p[0] == 0.0)
        throw InvalidInput("normalized: representative has x0 = 0");
    const double inv = 1.0 / p[0];
    return ProjectivePoint(inv * p.x);
}

ProjectivePoint affine_lerp(const ProjectivePoint& a, const ProjectivePoint& b, double t) {
    const ProjectivePoint an = normalized(a);
    const ProjectivePoint bn = normalized(b);
    return ProjectivePoint(an.x + t * (bn.x - an.x));
}

double hyperbolic_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (classify(a) != PointClass::Interior || classify(b) != PointClass::Interior)
        throw DomainError("hyperbolic_distance: both points must be interior");
    const double qaa = lorentz_product(a, a);
    const double qbb = lorentz_product(b, b);
    const double qab = lorentz_product(a, b);
    // |.| keeps the value invariant under negative rescaling of either
    // representative.
    double c = std::abs(qab) / std::sqrt(qaa * qbb);
    if (c < 1.0) {
        if (c < 1.0 - 1e-12)
            throw DomainError("hyperbolic_distance: cosh argument below 1");
        numerics::note_clamp("hyperbolic_distance");
        c = 1.0;
    }
    return std::acosh(c);
}

PlaneCovector polar_plane(const ProjectivePoint& p) {
    if (euclidean_norm2(p.x) == 0.0)
        throw InvalidInput("polar_plane: zero vector");
    return PlaneCovector(-p[0], p[1], p[2], p[3]);
}

ProjectivePoint pole(const PlaneCovector& u) {
    if (euclidean_norm2(u.u) == 0.0)
        throw InvalidInput("pole: zero covector");
    return ProjectivePoint(-u.u[0], u.u[1], u.u[2], u.u[3]);
}

ProjectivePoint foot_of_perpendicular(const ProjectivePoint& x, const PlaneCovector& u) {
    const ProjectivePoint p = pole(u);
    const double pp = lorentz_product(p, p);
    // The pole must be exterior, i.e. the plane meets the model interior.
    if (pp <= 0.0)
        throw DomainError("foot_of_perpendicular: plane does not meet the interior");
    const double xp = lorentz_product(x, p);
    return ProjectivePoint(x.x - (xp / pp) * p.x);
}

PlaneCovector plane_from_points(const ProjectivePoint& p, const ProjectivePoint& q,
                                const ProjectivePoint& r) {
    // Generalized cross product: u_i = +-det of the 3x3 minor omitting column i.
    const Vec4& a = p.x;
    const Vec4& b = q.x;
    const Vec4& c = r.x;
    auto det3 = [](double a0, double a1, double a2, double b0, double b1, double b2, double c0,
                   double c1, double c2) {
        return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
    };
    PlaneCovector u;
    u.u[0] = +det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
    u.u[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
    u.u[2] = +det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
    u.u[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);

    const double scale = std::max({std::abs(u.u[0]), std::abs(u.u[1]), std::abs(u.u[2]),
                                   std::abs(u.u[3])});
    const double in_scale =
        std::max({euclidean_norm2(a), euclidean_norm2(b), euclidean_norm2(c)});
    if (scale <= 1e-12 * in_scale * std::sqrt(in_scale))
        throw DegenerateInput("plane_from_points: points are projectively dependent");
    return u;
}

std::vector<QuadricRoot> segment_quadric_intersection(const ProjectivePoint& a,
                                                      const ProjectivePoint& b,
                                                      const Quadric& q) {
    const ProjectivePoint an = normalized(a);
    const ProjectivePoint bn = normalized(b);
    const Vec4 d = bn.x - an.x;
    if (euclidean_norm2(d) == 0.0)
        throw DegenerateInput("segment_quadric_intersection: segment endpoints coincide");

    // q(a + t d) = A t^2 + B t + C with A = d^T Q d, B = 2 a^T Q d, C = q(a).
    auto qform = [&q](const Vec4& x, const Vec4& y) {
        double acc = 0.0;
        for (int i = 0; i < 4; ++i) {
            double row = 0.0;
            for (int j = 0; j < 4; ++j)
                row += q.m[i][j] * y[j];
            acc += x[i] * row;
        }
        return acc;
    };
    const double A = qform(d, d);
    const double B = 2.0 * qform(an.x, d);
    const double C = qform(an.x, an.x);

    const double scale = std::max({std::abs(A), std::abs(B), std::abs(C)});
    std::vector<QuadricRoot> roots;
    auto push_if_in_range = [&roots](double t, bool tangent) {
        if (t >= -1e-12 && t <= 1.0 + 1e-12)
            roots.push_back({std::clamp(t, 0.0, 1.0), tangent});
    };

    if (scale == 0.0)
        return roots; // identically zero along the line: treat as no crossing
    if (std::abs(A) <= 1e-15 * scale) {
        if (std::abs(B) > 1e-15 * scale)
            push_if_in_range(-C / B, false);
        return roots;
    }
    const double disc = B * B - 4.0 * A * C;
    const double disc_scale = std::max(B * B, std::abs(4.0 * A * C));
    if (disc < 0.0) {
        if (disc > -1e-12 * disc_scale)
            push_if_in_range(-B / (2.0 * A), true); // grazing within tolerance
        return roots;
    }
    if (disc <= 1e-14 * disc_scale) {
        push_if_in_range(-B / (2.0 * A), true);
        return roots;
    }
    // Stable quadratic roots.
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (B + (B >= 0.0 ? sq : -sq));
    const double t1 = qq / A;
    const double t2 = (qq != 0.0) ? C / qq : -B / A - t1;
    push_if_in_range(std::min(t1, t2), false);
    push_if_in_range(std::max(t1, t2), false);
    return roots;
}

} // namespace horo
