#pragma once

namespace horo {

/// Lobachevsky function L(x) = -Integral_0^x log|2 sin t| dt, odd and
/// pi-periodic, evaluated to near machine accuracy for any real x.
double lobachevsky(double x);

/// Volume of a hyperbolic orthoscheme from its three essential dihedral
/// angles, each in [0, pi/2]. Throws DomainError when the auxiliary angle
/// theta is not real (the angles do not bound a hyperbolic orthoscheme).
double orthoscheme_volume(double a01, double a12, double a23);

/// Volume of an ideal tetrahedron with dihedral angles (alpha, beta,
/// pi - alpha - beta): L(alpha) + L(beta) + L(gamma).
double milnor_tet_volume(double alpha, double beta);

/// Volume of the plane-symmetric ideal tetrahedron with angle alpha at the
/// four symmetric edges: 2 L(alpha) - L(2 alpha) = -2 L(alpha + pi/2).
double symmetric_tet_volume(double alpha);

/// Shape parameter -> dihedral angle map for the one-parameter family,
/// alpha = arccos(-(1+2z)/(z+2)) / 2, strictly increasing with alpha(0) = pi/3.
double alpha_from_z(double z);

/// Convenience composition symmetric_tet_volume(alpha_from_z(z)).
double tet_volume_from_z(double z);

namespace detail {
/// The rejected variant of the angle map with denominator (z - 2); kept only
/// as a negative control for the verify report.
double alpha_from_z_rejected_variant(double z);
} // namespace detail

} // namespace horo
