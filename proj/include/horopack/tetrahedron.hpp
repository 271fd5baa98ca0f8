#pragma once

#include <array>

#include "horopack/projective.hpp"

namespace horo {

/// Plane-symmetric ideal tetrahedron of the one-parameter family:
///   E0 = (1, 0, sqrt(1-z^2), z),  E1 = (1,  sqrt(3)/2, 0, -1/2),
///   E2 = (1, -sqrt(3)/2, 0, -1/2), E3 = (1, 0, 0, 1).
/// The mirror x1 -> -x1 swaps E1 and E2 and fixes E0, E3.
struct SymmetricTetrahedron {
    double z = 0.0;
    double alpha = 0.0;  // dihedral angle at the four symmetric edges
    double volume = 0.0;
    std::array<ProjectivePoint, 4> vertex;
    std::array<PlaneCovector, 4> face; // face[i] opposite vertex i, value(E_i) > 0

    /// The three vertices other than i, in ascending index order.
    std::array<int, 3> others(int i) const;
};

SymmetricTetrahedron build_tetrahedron(double z);

/// Dihedral angle between the two faces meeting at edge (i, j), measured
/// geometrically from the face covectors. Cross-check for the closed-form
/// angle map.
double dihedral_angle(const SymmetricTetrahedron& t, int i, int j);

/// Mirror image x1 -> -x1 of a point.
ProjectivePoint mirror_x1(const ProjectivePoint& p);

} // namespace horo
