#pragma once

#include <vector>

#include "horopack/projective.hpp"

namespace horo {

/// Closed-form reference point on a tetrahedron edge, used by the
/// verification table. Coordinates follow the published sign/label
/// convention, which may differ from the engine's by the mirror x1 -> -x1
/// and the 1 <-> 2 vertex relabeling; matching is performed modulo both.
struct EdgeReferencePoint {
    int i = 0, j = 0; // edge (i, j)
    ProjectivePoint point;
};

/// Edge crossing/touch points of the S1 arrangement (one per edge).
std::vector<EdgeReferencePoint> s1_reference_points(double z);

/// Edge crossing/touch points of the S2 arrangement (two on edge (1,2)).
std::vector<EdgeReferencePoint> s2_reference_points(double z);

/// The (0,3) touch point of the S2 family with the denominator taken
/// verbatim from the published list (4z^2 + 22z + 22 instead of
/// z^2 + 22z + 22); its coordinates are not collinear with the edge and it
/// is kept as a negative control.
ProjectivePoint s2_point03_published_variant(double z);

/// Foot of the perpendicular from vertex 3 onto its opposite face; the face
/// touch point of the ball at vertex 3 in S2/S3/S4.
ProjectivePoint face3_foot_reference(double z);

/// The same foot with the transverse coordinate taken verbatim from the
/// published list (denominator (z+5)^2); fails plane incidence and is kept
/// as a negative control.
ProjectivePoint face3_foot_published_variant(double z);

/// Face touch point of the ball at vertex 2 on its opposite face (the S3
/// arrangement at its upper boundary).
ProjectivePoint face2_touch_reference(double z);

} // namespace horo
