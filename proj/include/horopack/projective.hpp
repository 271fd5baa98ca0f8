#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "horopack/errors.hpp"

namespace horo {

/// Homogeneous coordinate vector (x0, x1, x2, x3) of the projective model.
struct Vec4 {
    std::array<double, 4> v{0.0, 0.0, 0.0, 0.0};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
};

Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec4 operator*(double s, const Vec4& a);

/// Point of the projective model, defined up to a nonzero scale factor.
struct ProjectivePoint {
    Vec4 x;

    ProjectivePoint() = default;
    ProjectivePoint(double x0, double x1, double x2, double x3) : x{{x0, x1, x2, x3}} {}
    explicit ProjectivePoint(const Vec4& coords) : x(coords) {}

    double operator[](std::size_t i) const { return x[i]; }
};

/// Linear form u0*x0 + ... + u3*x3 representing a hyperplane, up to scale.
struct PlaneCovector {
    Vec4 u;

    PlaneCovector() = default;
    PlaneCovector(double u0, double u1, double u2, double u3) : u{{u0, u1, u2, u3}} {}

    /// Incidence value of the form on a point (sign-stable under positive
    /// rescaling of either side).
    double value(const ProjectivePoint& p) const;
};

/// Symmetric quadratic form; evaluation is x^T Q x.
struct Quadric {
    std::array<std::array<double, 4>, 4> m{};

    static Quadric absolute(); // diag(-1, 1, 1, 1)
    /// Builds a symmetric matrix from possibly asymmetric coefficients by
    /// averaging cross terms.
    static Quadric from_coefficients(const std::array<std::array<double, 4>, 4>& coeffs);

    double eval(const ProjectivePoint& p) const;
    /// Largest absolute entry; used to normalize residual checks.
    double max_abs() const;
};

/// 4x4 linear transform acting on homogeneous coordinates.
struct Transform4 {
    std::array<std::array<double, 4>, 4> m{};

    static Transform4 identity();
    ProjectivePoint apply(const ProjectivePoint& p) const;
    PlaneCovector apply_to_covector(const PlaneCovector& u) const; // u -> u o T
    Transform4 transposed() const;
    Transform4 compose(const Transform4& rhs) const; // this o rhs
    /// Pulls a quadric back through this transform: q'(x) = q(T x).
    Quadric pull_back(const Quadric& q) const;
};

enum class PointClass { Interior, Ideal, Exterior };

inline constexpr double kIdealClassEps = 1e-10;

/// Signature (-,+,+,+) bilinear form on coordinate representatives.
double lorentz_product(const Vec4& a, const Vec4& b);
double lorentz_product(const ProjectivePoint& a, const ProjectivePoint& b);

/// Classifies a point against the absolute quadric with a scale-invariant
/// tolerance band relative to the Euclidean norm of the representative.
PointClass classify(const ProjectivePoint& p, double eps = kIdealClassEps);

bool is_ideal(const ProjectivePoint& p, double eps = kIdealClassEps);
bool is_interior(const ProjectivePoint& p, double eps = kIdealClassEps);

/// Rescales to x0 = 1. Rejects representatives with x0 = 0.
ProjectivePoint normalized(const ProjectivePoint& p);

/// Affine point between two normalized representatives: a + t*(b - a).
ProjectivePoint affine_lerp(const ProjectivePoint& a, const ProjectivePoint& b, double t);

/// Distance of two interior points, k = 1. The cosh argument is clamped to 1
/// from below against rounding; clamps are counted, not errors.
double hyperbolic_distance(const ProjectivePoint& a, const ProjectivePoint& b);

/// Polar hyperplane u of a point: u(y) = <x, y> for all y.
PlaneCovector polar_plane(const ProjectivePoint& p);

/// Polar point of a plane (pole); inverse of polar_plane up to scale.
ProjectivePoint pole(const PlaneCovector& u);

/// Foot of the perpendicular dropped from a point onto a plane that meets
/// the model interior. Works for ideal apex points as well: the foot is the
/// intersection of the plane with the line through the point and the pole.
ProjectivePoint foot_of_perpendicular(const ProjectivePoint& x, const PlaneCovector& u);

/// Plane through three projectively independent points.
PlaneCovector plane_from_points(const ProjectivePoint& p, const ProjectivePoint& q,
                                const ProjectivePoint& r);

struct QuadricRoot {
    double t = 0.0;
    bool tangent = false; // double root
};

/// Real roots in [0,1] of q(a + t(b-a)) = 0 after normalizing a, b to x0 = 1,
/// sorted ascending. A double root is reported once with the tangent flag.
std::vector<QuadricRoot> segment_quadric_intersection(const ProjectivePoint& a,
                                                      const ProjectivePoint& b,
                                                      const Quadric& q);

} // namespace horo
