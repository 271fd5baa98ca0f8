#pragma once

#include <array>

#include "horopack/projective.hpp"

namespace horo {

/// Horoball in the ball model: ideal center plus the canonical size
/// parameter s in (-1, 1). In canonical position (center (1,0,0,1)) the
/// bounding horosphere meets the model axis at heights s (apex) and 1
/// (center); s -> 1 shrinks the ball to its ideal point.
struct Horoball {
    ProjectivePoint center; // ideal, stored normalized to x0 = 1
    double s = 0.0;

    Horoball() = default;
    Horoball(const ProjectivePoint& c, double size);

    /// Unit affine direction of the ideal center.
    std::array<double, 3> direction() const;
};

/// Symmetric quadric whose zero set is the canonical horosphere of size s
/// centered at (1,0,0,1). Positive inside the horoball.
Quadric canonical_horosphere_quadric(double s);

/// Rotation of the model (a Lorentz-orthogonal map) taking the canonical
/// center (1,0,0,1) to the given ideal center. Deterministic: rotation about
/// the axis e3 x d, with the half-turn about the x1-axis for the antipode.
Transform4 transport_to_center(const ProjectivePoint& center);

/// Bounding-horosphere quadric of a horoball at an arbitrary ideal center.
Quadric horosphere_quadric(const Horoball& h);

/// Canonical size of the horoball centered at `center` whose bounding
/// horosphere passes through the interior point p. Closed form; the
/// workhorse behind tangency solving and membership tests.
double s_through_point(const ProjectivePoint& center, const ProjectivePoint& p);

/// Signed interiority of p relative to the horoball: positive inside.
double horoball_excess(const Horoball& h, const ProjectivePoint& p);

struct SurfaceHit {
    ProjectivePoint point;
    double t = 0.0;
    bool tangent = false;
};

/// Intersection points of segment ab with the bounding horosphere. When an
/// endpoint is the ideal center itself, the spurious root at that endpoint
/// is dropped.
std::vector<SurfaceHit> surface_points_on_edge(const Horoball& h, const ProjectivePoint& a,
                                               const ProjectivePoint& b);

/// Unique crossing of the edge from the ball's own center toward another
/// vertex; exists for every s in (-1, 1).
SurfaceHit own_edge_crossing(const Horoball& h, const ProjectivePoint& toward);

struct PlaneTangency {
    double s = 0.0;
    ProjectivePoint touch;
};

/// Size making the horoball at `center` tangent to the plane; the touch
/// point is the foot of the perpendicular dropped from the center.
PlaneTangency tangent_s_to_plane(const ProjectivePoint& center, const PlaneCovector& plane);

struct BallTangency {
    double s = 0.0;
    ProjectivePoint touch;
};

/// Size s_b of the horoball at center_b externally tangent to the ball
/// (center_a, s_a). Bisection on the signed surface gap along the line of
/// centers, resolved to 1e-13 in s; a tangent partner always exists.
BallTangency tangent_s_to_horoball(const ProjectivePoint& center_a, double s_a,
                                   const ProjectivePoint& center_b);

/// Signed gap between the two surfaces along the line of centers
/// (hyperbolic length units, negative when the balls overlap).
double pair_margin(const Horoball& a, const Horoball& b);

/// Signed clearance between the ball surface and a plane along their common
/// perpendicular: artanh(s) - artanh(s_tangent). Negative when the ball
/// crosses the plane.
double plane_margin(const Horoball& h, const PlaneCovector& plane);

/// Reading of the horocycle arc-length/chord relation.
enum class ChordConvention {
    HalfChord, // l = 2 sinh(d/2); adopted
    FullChord, // l = sinh(d); negative control
};

/// Intrinsic (Euclidean) distance on the horosphere between two surface
/// points at hyperbolic chord distance d. Points must lie on the surface to
/// 1e-8 in s.
double intrinsic_length(const Horoball& h, const ProjectivePoint& p, const ProjectivePoint& q,
                        ChordConvention conv = ChordConvention::HalfChord);

/// Intrinsic triangle cut from the horosphere by three surface points.
struct HorosphericalTriangle {
    std::array<ProjectivePoint, 3> points;
    std::array<double, 3> sides{}; // intrinsic lengths
    double area = 0.0;             // Heron
};

HorosphericalTriangle horospherical_triangle(const Horoball& h,
                                             const std::array<ProjectivePoint, 3>& pts,
                                             ChordConvention conv = ChordConvention::HalfChord);

/// Numerically stable Heron area from three side lengths.
double heron_area(double a, double b, double c);

/// Volume of the horoball sector cut by the trihedron whose apex is the
/// ball's center and whose edges run toward the three given ideal vertices:
/// half the intrinsic area of the triangle of edge crossings.
double sector_volume(const Horoball& h, const std::array<ProjectivePoint, 3>& edge_ends,
                     ChordConvention conv = ChordConvention::HalfChord);

} // namespace horo
