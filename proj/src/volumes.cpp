#include "horopack/volumes.hpp"

#include <array>
#include <cmath>

#include "horopack/errors.hpp"

namespace horo {

namespace {

constexpr double kPi = 3.14159265358979323846;

// zeta(2n) for n = 1..40, enough for the Clausen series at |theta| <= pi
// where the terms shrink by at least a factor of 4 each. The low orders use
// the exact pi-power forms; from 2n >= 14 a direct sum to k = 100 already
// carries a tail below 1e-26.
const std::array<double, 40>& zeta_even_table() {
    static const std::array<double, 40> table = [] {
        std::array<double, 40> z{};
        const double p2 = kPi * kPi;
        const double p4 = p2 * p2, p6 = p4 * p2, p8 = p4 * p4, p10 = p8 * p2, p12 = p8 * p4;
        z[0] = p2 / 6.0;
        z[1] = p4 / 90.0;
        z[2] = p6 / 945.0;
        z[3] = p8 / 9450.0;
        z[4] = p10 / 93555.0;
        z[5] = 691.0 * p12 / 638512875.0;
        for (int n = 7; n <= 40; ++n) {
            double s = 0.0;
            for (int k = 100; k >= 1; --k)
                s += std::pow(static_cast<double>(k), -2.0 * n);
            z[n - 1] = s;
        }
        return z;
    }();
    return table;
}

// Clausen function Cl2(theta) = -Integral_0^theta log|2 sin(t/2)| dt for
// theta in [-pi, pi], via the series
//   Cl2(theta) = theta - theta*log|theta|
//              + sum_{n>=1} zeta(2n)/(n(2n+1)) * theta^(2n+1) / (2 pi)^(2n).
double clausen2_reduced(double theta) {
    if (theta == 0.0)
        return 0.0;
    const double t2 = (theta / (2.0 * kPi)) * (theta / (2.0 * kPi));
    const auto& zeta = zeta_even_table();
    double power = t2;
    double sum = 0.0;
    for (int n = 1; n <= 40; ++n) {
        const double term = zeta[n - 1] / (n * (2.0 * n + 1.0)) * power;
        sum += term;
        if (std::abs(term) <= 1e-16 * std::abs(sum))
            break;
        power *= t2;
    }
    return theta * (1.0 - std::log(std::abs(theta)) + sum);
}

} // namespace

double lobachevsky(double x) {
    // L(x) = Cl2(2x)/2; reduce 2x into [-pi, pi] by 2pi-periodicity.
    double theta = std::remainder(2.0 * x, 2.0 * kPi);
    return 0.5 * clausen2_reduced(theta);
}

double orthoscheme_volume(double a01, double a12, double a23) {
    const double half_pi = 0.5 * kPi;
    if (a01 < 0.0 || a01 > half_pi || a12 < 0.0 || a12 > half_pi || a23 < 0.0 || a23 > half_pi)
        throw DomainError("orthoscheme_volume: angles must lie in [0, pi/2]");

    const double c12 = std::cos(a12);
    const double s01 = std::sin(a01);
    const double s23 = std::sin(a23);
    double disc = c12 * c12 - s01 * s01 * s23 * s23;
    if (disc < 0.0) {
        if (disc < -1e-14)
            throw DomainError("orthoscheme_volume: not a hyperbolic orthoscheme (theta not real)");
        numerics::note_clamp("orthoscheme_volume");
        disc = 0.0;
    }
    const double theta = std::atan2(std::sqrt(disc), std::cos(a01) * std::cos(a23));

    const double vol =
        0.25 * (lobachevsky(a01 + theta) - lobachevsky(a01 - theta) +
                lobachevsky(half_pi + a12 - theta) + lobachevsky(half_pi - a12 - theta) +
                lobachevsky(a23 + theta) - lobachevsky(a23 - theta) +
                2.0 * lobachevsky(half_pi - theta));
    return vol;
}

double milnor_tet_volume(double alpha, double beta) {
    // Grouped so the result is bit-identical under swapping the arguments.
    const double gamma = kPi - (alpha + beta);
    if (alpha <= 0.0 || beta <= 0.0 || gamma <= 0.0)
        throw DomainError("milnor_tet_volume: angles must be positive with alpha + beta < pi");
    return (lobachevsky(alpha) + lobachevsky(beta)) + lobachevsky(gamma);
}

double symmetric_tet_volume(double alpha) {
    if (alpha <= 0.0 || alpha >= 0.5 * kPi)
        throw DomainError("symmetric_tet_volume: alpha must lie in (0, pi/2)");
    return -2.0 * lobachevsky(alpha + 0.5 * kPi);
}

double alpha_from_z(double z) {
    if (!(z > -1.0 && z < 1.0))
        throw DomainError("alpha_from_z: z must lie in (-1, 1)");
    return 0.5 * std::acos(-(1.0 + 2.0 * z) / (z + 2.0));
}

double tet_volume_from_z(double z) {
    return symmetric_tet_volume(alpha_from_z(z));
}

namespace detail {

double alpha_from_z_rejected_variant(double z) {
    const double c = -(1.0 + 2.0 * z) / (z - 2.0);
    if (std::abs(c) > 1.0)
        throw DomainError("alpha variant: cosine out of range");
    return 0.5 * std::acos(c);
}

} // namespace detail

} // namespace horo
